use num_traits::Zero;

use crate::exact::Rational;

/// Diagonal matrix `diag(φ_1, …, φ_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagMatrix {
    entries: Vec<Rational>,
}

impl DiagMatrix {
    pub fn new(entries: Vec<Rational>) -> Self {
        DiagMatrix { entries }
    }

    pub fn zero(n: usize) -> Self {
        DiagMatrix { entries: vec![Rational::zero(); n] }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, other: &DiagMatrix) -> DiagMatrix {
        DiagMatrix { entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, c: &Rational) -> DiagMatrix {
        DiagMatrix { entries: self.entries.iter().map(|a| a * c).collect() }
    }
}
