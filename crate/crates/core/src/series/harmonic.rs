use rug::ops::Pow;
use rug::{Integer, Rational};

/// `H_n^(p) = Σ_{k=1}^{n} k^-p`, exactly.
pub fn harmonic(n: u64, p: u32) -> Rational {
    let mut acc = Rational::new();
    for k in 1..=n {
        acc += Rational::from((Integer::from(1), Integer::from(k).pow(p)));
    }
    acc
}

/// `h_n^(p) = Σ_{k=1}^{n} (k − 1/2)^-p = Σ_{k=1}^{n} 2^p (2k − 1)^-p`, exactly.
pub fn odd_harmonic(n: u64, p: u32) -> Rational {
    let mut acc = Rational::new();
    for k in 1..=n {
        acc += Rational::from((Integer::from(1), Integer::from(2 * k - 1).pow(p)));
    }
    acc << p
}
