//! Graded Betti numbers and Castelnuovo-Mumford regularity of squarefree
//! monomial ideals through Hochster's formula:
//!
//! `β_{i,j}(I) = Σ_{|σ| = j} dim H̃_{j-i-2}(Δ_σ; GF(p))`,
//!
//! where `Δ_σ` is the Stanley-Reisner complex of `I` restricted to `σ`. Hence
//! `reg(I) = 2 + max{ d : H̃_d(Δ_σ) ≠ 0 for some σ }`.
//!
//! A variable of `σ` lying in no generator contained in `σ` is a cone point of
//! `Δ_σ`, which then has no reduced homology; such `σ` are skipped, which also
//! prunes variables absent from every generator.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::RegularityError;
use crate::ideal::Ideal;

pub const DEFAULT_PRIME: u32 = 2;
pub const DEFAULT_VERTEX_CAP: usize = 14;
/// Hard ceiling for the vertex cap; `3^20` face visits is already hours.
pub const MAX_VERTEX_CAP: usize = 20;

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Coefficient field and size limit for homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HomologyConfig {
    prime: u32,
    vertex_cap: usize,
}

impl Default for HomologyConfig {
    fn default() -> Self {
        Self { prime: DEFAULT_PRIME, vertex_cap: DEFAULT_VERTEX_CAP }
    }
}

impl HomologyConfig {
    pub fn new(prime: u32, vertex_cap: usize) -> Result<Self, RegularityError> {
        if !is_prime(prime) {
            return Err(RegularityError::NotPrime(prime));
        }
        Ok(Self { prime, vertex_cap })
    }

    pub fn with_prime(prime: u32) -> Result<Self, RegularityError> {
        Self::new(prime, DEFAULT_VERTEX_CAP)
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn vertex_cap(&self) -> usize {
        self.vertex_cap
    }

    /// Ranks of `H̃_d(Δ_σ; GF(p))` for `d = -1 ..= |σ| - 1`.
    pub fn reduced_homology_ranks(&self, ideal: &Ideal, sigma: u64) -> Result<Vec<usize>, RegularityError> {
        if ideal.nvars() < 64 && sigma >> ideal.nvars() != 0 {
            return Err(RegularityError::SubsetOutOfRange);
        }
        let size = sigma.count_ones() as usize;
        if size > self.vertex_cap {
            return Err(RegularityError::CapExceeded { active: size, cap: self.vertex_cap });
        }
        let complex = InducedComplex::new(ideal, sigma);
        let mut ranks = complex.homology(self.prime);
        ranks.resize(size + 1, 0);
        Ok(ranks)
    }

    pub fn regularity(&self, ideal: &Ideal) -> Result<usize, RegularityError> {
        let (active, gens) = self.scan_input(ideal)?;
        let mut best: i32 = -2;
        for sigma in subsets_desc(active) {
            // Δ_σ has dimension at most |σ| - 2 once σ contains a generator.
            if sigma.count_ones() as i32 - 2 <= best {
                continue;
            }
            let Some(inside) = cone_free_generators(&gens, sigma) else { continue };
            let complex = InducedComplex::from_generators(&inside, sigma);
            if let Some(d) = complex.top_homology_degree(self.prime, best) {
                best = d;
            }
        }
        debug_assert!(best >= -1, "a nonzero proper ideal has a generator giving homology");
        Ok((best + 2) as usize)
    }

    pub fn betti_table(&self, ideal: &Ideal) -> Result<BettiTable, RegularityError> {
        let (active, gens) = self.scan_input(ideal)?;
        let mut entries = BTreeMap::new();
        for sigma in subsets_desc(active) {
            let Some(inside) = cone_free_generators(&gens, sigma) else { continue };
            let j = sigma.count_ones() as i32;
            let ranks = InducedComplex::from_generators(&inside, sigma).homology(self.prime);
            for (k, &h) in ranks.iter().enumerate() {
                let d = k as i32 - 1;
                let i = j - d - 2;
                if h > 0 && i >= 0 {
                    *entries.entry((i as usize, j as usize)).or_insert(0) += h;
                }
            }
        }
        Ok(BettiTable { prime: self.prime, entries })
    }

    /// For an ideal generated in a single degree `d`: `reg(I) = d`.
    pub fn has_linear_resolution(&self, ideal: &Ideal) -> Result<bool, RegularityError> {
        if ideal.is_zero() {
            return Err(RegularityError::ZeroIdeal);
        }
        let d = ideal.generating_degree().ok_or(RegularityError::MixedDegrees)?;
        Ok(self.regularity(ideal)? == d)
    }

    fn scan_input(&self, ideal: &Ideal) -> Result<(u64, Vec<u64>), RegularityError> {
        if ideal.is_zero() {
            return Err(RegularityError::ZeroIdeal);
        }
        if ideal.is_unit() {
            return Err(RegularityError::UnitIdeal);
        }
        let active = ideal.active_support();
        let count = active.count_ones() as usize;
        if count > self.vertex_cap {
            return Err(RegularityError::CapExceeded { active: count, cap: self.vertex_cap });
        }
        Ok((active, ideal.gens().iter().map(|g| g.support()).collect()))
    }
}

/// Anything that can produce the regularity of a squarefree monomial ideal,
/// e.g. a plain [`HomologyConfig`] or a memoizing wrapper around one.
pub trait RegularityOracle {
    fn regularity_of(&self, ideal: &Ideal) -> Result<usize, RegularityError>;
}

impl RegularityOracle for HomologyConfig {
    fn regularity_of(&self, ideal: &Ideal) -> Result<usize, RegularityError> {
        self.regularity(ideal)
    }
}

pub fn reduced_homology_ranks(ideal: &Ideal, sigma: u64, prime: u32) -> Result<Vec<usize>, RegularityError> {
    HomologyConfig::with_prime(prime)?.reduced_homology_ranks(ideal, sigma)
}

pub fn regularity(ideal: &Ideal, prime: u32) -> Result<usize, RegularityError> {
    HomologyConfig::with_prime(prime)?.regularity(ideal)
}

pub fn betti_table(ideal: &Ideal, prime: u32) -> Result<BettiTable, RegularityError> {
    HomologyConfig::with_prime(prime)?.betti_table(ideal)
}

pub fn has_linear_resolution(ideal: &Ideal, prime: u32) -> Result<bool, RegularityError> {
    HomologyConfig::with_prime(prime)?.has_linear_resolution(ideal)
}

/// Nonempty subsets of `set`, largest bit pattern first.
fn subsets_desc(set: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(set);
    std::iter::from_fn(move || {
        let cur = next?;
        next = (cur != 0).then(|| cur.wrapping_sub(1) & set).filter(|&s| s != 0);
        (cur != 0).then_some(cur)
    })
}

/// Generators inside `sigma`, or `None` when some vertex of `sigma` is a cone
/// point of `Δ_σ`.
fn cone_free_generators(gens: &[u64], sigma: u64) -> Option<Vec<u64>> {
    let inside: Vec<u64> = gens.iter().copied().filter(|g| g & !sigma == 0).collect();
    let covered = inside.iter().fold(0, |acc, g| acc | g);
    (covered == sigma).then_some(inside)
}

/// `Δ_σ`: subsets of `σ` containing no generator support.
#[derive(Clone, Debug)]
pub struct InducedComplex {
    sigma: u64,
    /// `faces[k]` lists the faces of dimension `k - 1`, sorted.
    faces: Vec<Vec<u64>>,
}

impl InducedComplex {
    pub fn new(ideal: &Ideal, sigma: u64) -> Self {
        let inside: Vec<u64> = ideal.gens().iter().map(|g| g.support()).filter(|g| g & !sigma == 0).collect();
        Self::from_generators(&inside, sigma)
    }

    fn from_generators(gens: &[u64], sigma: u64) -> Self {
        if gens.contains(&0) {
            return Self { sigma, faces: Vec::new() };
        }
        let mut faces = vec![vec![0u64]];
        loop {
            let mut next = Vec::new();
            for &face in faces.last().unwrap() {
                let floor = if face == 0 { 0 } else { 64 - face.leading_zeros() };
                let mut extra = if floor >= 64 { 0 } else { sigma >> floor << floor };
                while extra != 0 {
                    let v = extra & extra.wrapping_neg();
                    extra &= extra - 1;
                    let grown = face | v;
                    if gens.iter().all(|g| g & v == 0 || g & !grown != 0) {
                        next.push(grown);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_unstable();
            faces.push(next);
        }
        Self { sigma, faces }
    }

    pub fn sigma(&self) -> u64 {
        self.sigma
    }

    /// Face counts `f_{-1}, f_0, f_1, ...`; empty for the void complex.
    pub fn face_counts(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Ranks `H̃_{-1}, H̃_0, ...` up to the dimension of the complex.
    pub fn homology(&self, prime: u32) -> Vec<usize> {
        let ranks: Vec<usize> = (0..self.faces.len()).map(|k| self.boundary_rank(k, prime)).collect();
        (0..self.faces.len())
            .map(|k| {
                let above = ranks.get(k + 1).copied().unwrap_or(0);
                self.faces[k].len() - ranks[k] - above
            })
            .collect()
    }

    /// Largest `d > floor` with `H̃_d ≠ 0`.
    fn top_homology_degree(&self, prime: u32, floor: i32) -> Option<i32> {
        let mut rank_above = 0;
        for k in (0..self.faces.len()).rev() {
            let d = k as i32 - 1;
            if d <= floor {
                break;
            }
            let rank = self.boundary_rank(k, prime);
            if self.faces[k].len() > rank + rank_above {
                return Some(d);
            }
            rank_above = rank;
        }
        None
    }

    /// Rank of the boundary map out of `faces[k]`; zero for `k = 0`.
    fn boundary_rank(&self, k: usize, prime: u32) -> usize {
        if k == 0 {
            return 0;
        }
        let rows = &self.faces[k];
        let cols = &self.faces[k - 1];
        let column = |face: u64| cols.binary_search(&face).expect("faces are closed under subsets");
        if prime == 2 {
            let words = cols.len().div_ceil(64);
            let matrix = rows.iter().map(|&face| {
                let mut row = vec![0u64; words];
                let mut rest = face;
                while rest != 0 {
                    let v = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    let c = column(face & !v);
                    row[c / 64] |= 1 << (c % 64);
                }
                row
            });
            gf2_rank(matrix)
        } else {
            let minus_one = prime - 1;
            let matrix = rows.iter().map(|&face| {
                let mut row = vec![0u32; cols.len()];
                let mut rest = face;
                let mut sign = false;
                while rest != 0 {
                    let v = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    row[column(face & !v)] = if sign { minus_one } else { 1 };
                    sign = !sign;
                }
                row
            });
            modp_rank(matrix, prime)
        }
    }
}

/// Rank over GF(2) of bit-packed rows, by inserting each row into an echelon
/// basis keyed on its lowest set column.
pub fn gf2_rank<I: IntoIterator<Item = Vec<u64>>>(rows: I) -> usize {
    let mut basis: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
    for mut row in rows {
        while let Some(lead) = lowest_bit(&row) {
            match basis.get(&lead) {
                Some(pivot) => row.iter_mut().zip(pivot).for_each(|(a, b)| *a ^= b),
                None => {
                    basis.insert(lead, row);
                    break;
                }
            }
        }
    }
    basis.len()
}

fn lowest_bit(row: &[u64]) -> Option<usize> {
    row.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Rank over GF(p) of dense rows with entries in `0..p`.
pub fn modp_rank<I: IntoIterator<Item = Vec<u32>>>(rows: I, prime: u32) -> usize {
    let p = prime as u64;
    let mut basis: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for mut row in rows {
        while let Some(lead) = row.iter().position(|&x| x != 0) {
            match basis.get(&lead) {
                Some(pivot) => {
                    let factor = row[lead] as u64;
                    for (a, &b) in row.iter_mut().zip(pivot).skip(lead) {
                        *a = ((*a as u64 + p - factor * b as u64 % p) % p) as u32;
                    }
                }
                None => {
                    let inv = mod_pow(row[lead] as u64, p - 2, p);
                    for a in row.iter_mut().skip(lead) {
                        *a = (*a as u64 * inv % p) as u32;
                    }
                    basis.insert(lead, row);
                    break;
                }
            }
        }
    }
    basis.len()
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Nonzero graded Betti numbers `β_{i,j}(I)` over GF(p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub prime: u32,
    pub entries: BTreeMap<(usize, usize), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `max { j - i : β_{i,j} ≠ 0 }`.
    pub fn regularity(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, j)| j - i).max()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<[usize; 3]> = self.entries.iter().map(|(&(i, j), &c)| [i, j, c]).collect();
        let mut st = serializer.serialize_struct("BettiTable", 2)?;
        st.serialize_field("prime", &self.prime)?;
        st.serialize_field("entries", &rows)?;
        st.end()
    }
}
