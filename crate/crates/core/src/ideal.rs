//! Squarefree monomials and monomial ideals generated by them.
//!
//! A squarefree monomial is its support, stored as a `u64` bitmask. Ideals keep
//! their minimal generating set sorted by `(degree, support)`, so two ideals
//! over the same ring are equal exactly when their generator lists are.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::IdealError;
use crate::graph::Graph;

pub const MAX_VARIABLES: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_support(bits: u64) -> Self {
        Monomial(bits)
    }

    pub fn from_vars<I: IntoIterator<Item = usize>>(vars: I) -> Self {
        Monomial(vars.into_iter().fold(0, |acc, v| acc | 1u64 << v))
    }

    pub fn var(v: usize) -> Self {
        Monomial(1 << v)
    }

    pub fn support(self) -> u64 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn gcd(self, other: Monomial) -> Monomial {
        Monomial(self.0 & other.0)
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        Monomial(self.0 | other.0)
    }

    pub fn is_coprime(self, other: Monomial) -> bool {
        self.0 & other.0 == 0
    }

    /// `self / gcd(self, other)`: the generator of the principal colon `(self : other)`.
    pub fn colon(self, other: Monomial) -> Monomial {
        Monomial(self.0 & !other.0)
    }

    pub fn vars(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            (rest != 0).then(|| {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                v
            })
        })
    }

    /// Highest variable index plus one; zero for the constant monomial.
    pub fn span(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.0).cmp(&(other.degree(), other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.vars().map(|v| format!("x{v}")).collect();
        f.write_str(&parts.join("*"))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.vars().collect::<Vec<_>>().serialize(serializer)
    }
}

/// Reduces a list of monomials to its divisibility-minimal elements in
/// canonical order.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(g)) {
            kept.push(g);
        }
    }
    kept.sort_unstable();
    kept
}

/// A squarefree monomial ideal in `nvars` variables, held as its minimal
/// generating set. The zero ideal has no generators; the unit ideal has the
/// single generator `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl Ideal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Result<Self, IdealError> {
        if nvars > MAX_VARIABLES {
            return Err(IdealError::TooManyVariables(nvars));
        }
        if let Some(g) = gens.iter().find(|g| g.span() > nvars) {
            return Err(IdealError::VariableOutOfRange { var: g.span() - 1, nvars });
        }
        Ok(Self { nvars, gens: minimalize(gens) })
    }

    pub fn zero(nvars: usize) -> Self {
        Self { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        Self { nvars, gens: vec![Monomial::ONE] }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// Number of minimal generators.
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    /// No generators, i.e. the zero ideal.
    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first() == Some(&Monomial::ONE)
    }

    /// Variables appearing in some generator.
    pub fn active_support(&self) -> u64 {
        self.gens.iter().fold(0, |acc, g| acc | g.support())
    }

    pub fn contains(&self, m: Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Number of minimal generators in each degree.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for g in &self.gens {
            *hist.entry(g.degree()).or_insert(0) += 1;
        }
        hist
    }

    /// The common generator degree, if there is one.
    pub fn generating_degree(&self) -> Option<usize> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    /// Squarefree part of the `s`-th power: minimal elements among unions of
    /// `s` generators with pairwise disjoint supports.
    pub fn squarefree_power(&self, s: usize) -> Result<Ideal, IdealError> {
        if s == 0 {
            return Err(IdealError::ExponentTooSmall(0));
        }
        if self.is_unit() {
            return Ok(self.clone());
        }

        fn extend(gens: &[Monomial], from: usize, acc: Monomial, left: usize, out: &mut Vec<Monomial>) {
            if left == 0 {
                out.push(acc);
                return;
            }
            for k in from..gens.len() {
                if gens.len() - k < left {
                    break;
                }
                if gens[k].is_coprime(acc) {
                    extend(gens, k + 1, acc.lcm(gens[k]), left - 1, out);
                }
            }
        }

        let mut out = Vec::new();
        extend(&self.gens, 0, Monomial::ONE, s, &mut out);
        Ok(Ideal { nvars: self.nvars, gens: minimalize(out) })
    }

    /// `(I : m)`, generated by `g / gcd(g, m)` over the generators `g`.
    pub fn colon(&self, m: Monomial) -> Ideal {
        let gens = self.gens.iter().map(|g| g.colon(m)).collect();
        Ideal { nvars: self.nvars, gens: minimalize(gens) }
    }

    /// `I + (extra)` with a minimal generating set.
    pub fn add(&self, extra: &[Monomial]) -> Result<Ideal, IdealError> {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(extra);
        Ideal::new(self.nvars, gens)
    }
}

/// Generators are the products `x_i x_j` over the edges of `g`.
pub fn edge_ideal(g: &Graph) -> Ideal {
    let gens = g.edges().into_iter().map(|(u, v)| Monomial::from_vars([u, v])).collect();
    Ideal { nvars: g.n(), gens: minimalize(gens) }
}

/// Equality of minimal generating sets (and of ambient rings).
pub fn ideal_equals(a: &Ideal, b: &Ideal) -> bool {
    a == b
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal[{}]{}", self.nvars, self)
    }
}

impl Serialize for Ideal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.gens.serialize(serializer)
    }
}
