use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use crate::{Error, Result};

/// A vector in F₂ⁿ, stored as a bitmask with the leftmost bit most
/// significant, so `bits` is also the computational-basis index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Vector {
    n: usize,
    bits: u32,
}

impl F2Vector {
    /// Maximum supported length (bits fit a u32 bitmask).
    pub const MAX_LEN: usize = 31;

    pub fn zero(n: usize) -> Self {
        assert!(n <= Self::MAX_LEN, "vector length {n} exceeds {}", Self::MAX_LEN);
        F2Vector { n, bits: 0 }
    }

    /// Vector whose computational-basis index is `index`.
    pub fn from_index(n: usize, index: usize) -> Self {
        assert!(n <= Self::MAX_LEN);
        assert!(index < (1usize << n), "index {index} out of range for n={n}");
        F2Vector { n, bits: index as u32 }
    }

    /// Build from explicit coordinates, leftmost first.
    pub fn from_coords(coords: &[u8]) -> Self {
        assert!(coords.len() <= Self::MAX_LEN);
        let mut bits = 0u32;
        for &c in coords {
            bits = (bits << 1) | u32::from(c & 1);
        }
        F2Vector { n: coords.len(), bits }
    }

    /// Standard basis vector e_i (0-indexed, leftmost position 0).
    pub fn standard(n: usize, i: usize) -> Self {
        assert!(i < n && n <= Self::MAX_LEN);
        F2Vector {
            n,
            bits: 1 << (n - 1 - i),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Computational-basis index Σ xᵢ·2^{n−1−i}.
    pub fn index(&self) -> usize {
        self.bits as usize
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Coordinate at position `i` (0-indexed from the left).
    pub fn get(&self, i: usize) -> u8 {
        assert!(i < self.n);
        ((self.bits >> (self.n - 1 - i)) & 1) as u8
    }

    pub fn set(&mut self, i: usize, value: u8) {
        assert!(i < self.n);
        let mask = 1u32 << (self.n - 1 - i);
        if value & 1 == 1 {
            self.bits |= mask;
        } else {
            self.bits &= !mask;
        }
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Dot product over F₂ (parity of the AND).
    pub fn dot(&self, other: &F2Vector) -> u8 {
        assert_eq!(self.n, other.n, "dot product requires equal lengths");
        ((self.bits & other.bits).count_ones() & 1) as u8
    }

    /// Positions where the coordinate equals `value` (0-indexed, ascending).
    pub fn positions_with(&self, value: u8) -> Vec<usize> {
        (0..self.n).filter(|&i| self.get(i) == value & 1).collect()
    }

    /// Complement of every coordinate.
    pub fn complement(&self) -> F2Vector {
        F2Vector {
            n: self.n,
            bits: !self.bits & ((1u32 << self.n) - 1),
        }
    }

    /// Number of positions where both vectors are 1.
    pub fn overlap(&self, other: &F2Vector) -> usize {
        assert_eq!(self.n, other.n);
        (self.bits & other.bits).count_ones() as usize
    }

    pub fn coords(&self) -> Vec<u8> {
        (0..self.n).map(|i| self.get(i)).collect()
    }
}

impl Add for F2Vector {
    type Output = F2Vector;

    fn add(self, rhs: F2Vector) -> F2Vector {
        assert_eq!(self.n, rhs.n, "vector addition requires equal lengths");
        F2Vector {
            n: self.n,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl AddAssign for F2Vector {
    fn add_assign(&mut self, rhs: F2Vector) {
        assert_eq!(self.n, rhs.n);
        self.bits ^= rhs.bits;
    }
}

impl fmt::Display for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "{}", self.get(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vector({self})")
    }
}

impl FromStr for F2Vector {
    type Err = Error;

    /// Parse a bitstring such as "0110".
    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || s.len() > Self::MAX_LEN {
            return Err(Error::parse(format!(
                "bitstring length must be 1..={}, got {}",
                Self::MAX_LEN,
                s.len()
            )));
        }
        let mut bits = 0u32;
        for c in s.chars() {
            bits = (bits << 1)
                | match c {
                    '0' => 0,
                    '1' => 1,
                    _ => return Err(Error::parse(format!("invalid bit character {c:?}"))),
                };
        }
        Ok(F2Vector { n: s.len(), bits })
    }
}
