//! Exact scalar sequences over all integer indices.
//!
//! `T` (Tribonacci, seeds 0, 1, 1) and `K` (Tribonacci-Lucas, seeds 3, 1, 3)
//! share the recurrence `x[n] = x[n-1] + x[n-2] + x[n-3]`, run backwards as
//! `x[n] = x[n+3] - x[n+2] - x[n+1]` for negative indices. The auxiliaries
//! are
//!
//! - `R[n] = 3 T[n+1] - T[n]` for `n >= 0`,
//! - `U[n] = T[n-1] + T[n-2]` for `n >= 2`, with `U[0] = U[1] = 0`,
//! - `C[n] = K[-n]` for every `n` (the pairwise root-power sum, since the
//!   product of the three roots is 1),
//! - `S[m] = T[0] + ... + T[m]` for `m >= 0`.

use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceKind {
    T,
    K,
    R,
    U,
    C,
    S,
}

impl SequenceKind {
    pub const ALL: [SequenceKind; 6] = [Self::T, Self::K, Self::R, Self::U, Self::C, Self::S];

    pub fn name(self) -> &'static str {
        match self {
            Self::T => "T",
            Self::K => "K",
            Self::R => "R",
            Self::U => "U",
            Self::C => "C",
            Self::S => "S",
        }
    }

    /// Smallest admissible index, `None` when every integer is accepted.
    pub fn domain_min(self) -> Option<i64> {
        match self {
            Self::T | Self::K | Self::C => None,
            Self::R | Self::U | Self::S => Some(0),
        }
    }

    pub fn domain(self) -> &'static str {
        match self.domain_min() {
            None => "all integers",
            Some(_) => "n >= 0",
        }
    }

    pub fn check_index(self, n: i64) -> Result<()> {
        match self.domain_min() {
            Some(min) if n < min => Err(Error::IndexOutOfDomain {
                kind: self.name(),
                index: n,
                domain: self.domain(),
            }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "T" | "t" => Self::T,
            "K" | "k" => Self::K,
            "R" | "r" => Self::R,
            "U" | "u" => Self::U,
            "C" | "c" => Self::C,
            "S" | "s" => Self::S,
            _ => {
                return Err(Error::Unknown {
                    what: "sequence kind",
                    name: s.to_string(),
                })
            }
        })
    }
}

pub(crate) const T_SEEDS: [i64; 3] = [0, 1, 1];
pub(crate) const K_SEEDS: [i64; 3] = [3, 1, 3];

/// Values of one order-3 sequence on a contiguous window around zero.
///
/// `forward[i]` holds index `i`; `backward[i]` holds index `-(i + 1)`.
#[derive(Debug)]
struct Window {
    forward: Vec<BigInt>,
    backward: Vec<BigInt>,
}

impl Window {
    fn new(seeds: [i64; 3]) -> Self {
        Window {
            forward: seeds.iter().map(|&s| BigInt::from(s)).collect(),
            backward: Vec::new(),
        }
    }

    fn get(&self, n: i64) -> Option<&BigInt> {
        if n >= 0 {
            self.forward.get(n as usize)
        } else {
            self.backward.get((-n - 1) as usize)
        }
    }

    fn at(&self, n: i64) -> &BigInt {
        self.get(n).expect("index inside the filled window")
    }

    fn extend_to(&mut self, n: i64) {
        if n >= 0 {
            let target = n as usize;
            while self.forward.len() <= target {
                let len = self.forward.len();
                let next = &self.forward[len - 1] + &self.forward[len - 2] + &self.forward[len - 3];
                self.forward.push(next);
            }
        } else {
            let target = (-n - 1) as usize;
            while self.backward.len() <= target {
                let m = -(self.backward.len() as i64) - 1;
                let next = self.at(m + 3) - self.at(m + 2) - self.at(m + 1);
                self.backward.push(next);
            }
        }
    }
}

struct Memo {
    t: RwLock<Window>,
    k: RwLock<Window>,
}

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| Memo {
        t: RwLock::new(Window::new(T_SEEDS)),
        k: RwLock::new(Window::new(K_SEEDS)),
    })
}

fn lookup(lock: &RwLock<Window>, n: i64) -> BigInt {
    if let Some(v) = lock.read().expect("sequence cache poisoned").get(n) {
        return v.clone();
    }
    let mut w = lock.write().expect("sequence cache poisoned");
    w.extend_to(n);
    w.at(n).clone()
}

/// `T[n]` for any integer `n`.
pub fn tribonacci(n: i64) -> BigInt {
    lookup(&memo().t, n)
}

/// `K[n]` for any integer `n`.
pub fn tribonacci_lucas(n: i64) -> BigInt {
    lookup(&memo().k, n)
}

/// Runs the recurrence from the seeds without touching the shared cache.
pub fn order3_uncached(seeds: [i64; 3], n: i64) -> BigInt {
    let (mut a, mut b, mut c) = (BigInt::from(seeds[0]), BigInt::from(seeds[1]), BigInt::from(seeds[2]));
    if n >= 0 {
        // (a, b, c) = (x[i], x[i+1], x[i+2])
        for _ in 0..n {
            let next = &a + &b + &c;
            a = std::mem::replace(&mut b, std::mem::replace(&mut c, next));
        }
        a
    } else {
        for _ in 0..(-n) {
            let prev = &c - &b - &a;
            c = std::mem::replace(&mut b, std::mem::replace(&mut a, prev));
        }
        a
    }
}

pub fn tribonacci_uncached(n: i64) -> BigInt {
    order3_uncached(T_SEEDS, n)
}

pub fn tribonacci_lucas_uncached(n: i64) -> BigInt {
    order3_uncached(K_SEEDS, n)
}

/// The auxiliary sequences `R`, `U`, `C`, `S`.
///
/// `T` and `K` are accepted too so callers can dispatch on any kind.
pub fn derived_scalar(kind: SequenceKind, n: i64) -> Result<BigInt> {
    kind.check_index(n)?;
    Ok(match kind {
        SequenceKind::T => tribonacci(n),
        SequenceKind::K => tribonacci_lucas(n),
        SequenceKind::R => 3 * tribonacci(n + 1) - tribonacci(n),
        SequenceKind::U => {
            if n < 2 {
                BigInt::zero()
            } else {
                tribonacci(n - 1) + tribonacci(n - 2)
            }
        }
        SequenceKind::C => tribonacci_lucas(-n),
        SequenceKind::S => (0..=n).fold(BigInt::zero(), |acc, k| acc + tribonacci(k)),
    })
}
