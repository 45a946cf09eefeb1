//! Prime fields and the exact rank arithmetic used by the homology engine.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// A prime field `GF(p)`. The default working characteristic is 32003.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FieldSpec {
    characteristic: u64,
}

pub const DEFAULT_CHARACTERISTIC: u64 = 32003;

impl FieldSpec {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldSpec { characteristic: p })
    }

    pub fn default_field() -> Self {
        FieldSpec {
            characteristic: DEFAULT_CHARACTERISTIC,
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::default_field()
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Clone, Copy)]
pub(crate) struct Gf {
    p: u64,
}

impl Gf {
    pub fn new(field: FieldSpec) -> Self {
        Gf {
            p: field.characteristic(),
        }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn inv(&self, a: u64) -> u64 {
        // extended Euclid; a != 0 mod p
        debug_assert!(a % self.p != 0);
        let (mut r0, mut r1) = (self.p as i128, (a % self.p) as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        (t0.rem_euclid(self.p as i128)) as u64
    }
}

/// A sparse row: (column, nonzero coefficient), sorted by column.
pub(crate) type SparseRow = Vec<(u32, u64)>;

/// Incrementally reduced row space over `GF(p)`; rows keep distinct leading
/// columns. Supports rank queries and span-membership tests.
pub(crate) struct RowSpace {
    gf: Gf,
    rows: Vec<SparseRow>,
}

impl RowSpace {
    pub fn new(gf: Gf) -> Self {
        RowSpace { gf, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the stored rows' leading entries.
    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        loop {
            let Some(&(lead, coeff)) = row.first() else {
                return row;
            };
            let Some(pivot) = self.rows.iter().find(|r| r[0].0 == lead) else {
                return row;
            };
            let factor = self.gf.mul(coeff, self.gf.inv(pivot[0].1));
            row = sub_scaled(&self.gf, &row, pivot, factor);
        }
    }

    /// Inserts a row; returns true when it was independent of the span.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let reduced = self.reduce(row);
        if reduced.is_empty() {
            return false;
        }
        let lead = reduced[0].0;
        let pos = self.rows.partition_point(|r| r[0].0 < lead);
        self.rows.insert(pos, reduced);
        true
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }
}

/// `row - factor * pivot` over `GF(p)`, merging sorted sparse rows.
fn sub_scaled(gf: &Gf, row: &SparseRow, pivot: &SparseRow, factor: u64) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < row.len() || j < pivot.len() {
        match (row.get(i), pivot.get(j)) {
            (Some(&(ci, vi)), Some(&(cj, vj))) if ci == cj => {
                let v = gf.sub(vi, gf.mul(factor, vj));
                if v != 0 {
                    out.push((ci, v));
                }
                i += 1;
                j += 1;
            }
            (Some(&(ci, vi)), Some(&(cj, _))) if ci < cj => {
                out.push((ci, vi));
                i += 1;
            }
            (Some(_), Some(&(cj, vj))) => {
                let v = gf.neg(gf.mul(factor, vj));
                if v != 0 {
                    out.push((cj, v));
                }
                j += 1;
            }
            (Some(&(ci, vi)), None) => {
                out.push((ci, vi));
                i += 1;
            }
            (None, Some(&(cj, vj))) => {
                let v = gf.neg(gf.mul(factor, vj));
                if v != 0 {
                    out.push((cj, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Rank of a sparse matrix given by rows.
pub(crate) fn rank(gf: Gf, rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut space = RowSpace::new(gf);
    for row in rows {
        space.insert(row);
    }
    space.rank()
}

/// A basis of the kernel of the linear map sending domain basis vector `i`
/// to `rows[i]`. Kernel vectors come out as sparse rows over the domain.
pub(crate) fn kernel_basis(gf: Gf, rows: &[SparseRow], codomain_shift: u32) -> Vec<SparseRow> {
    // Augment: [image | e_i] with the tracking part shifted past the codomain.
    let mut space = RowSpace::new(gf);
    let mut kernel = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut aug: SparseRow = row.clone();
        aug.push((codomain_shift + i as u32, 1));
        let reduced = space.reduce(aug);
        match reduced.first() {
            Some(&(lead, _)) if lead < codomain_shift => {
                space.rows.insert(
                    space.rows.partition_point(|r| r[0].0 < lead),
                    reduced,
                );
            }
            _ => {
                // image part vanished: the tracking part is a kernel vector
                let vec: SparseRow = reduced
                    .into_iter()
                    .map(|(c, v)| (c - codomain_shift, v))
                    .collect();
                kernel.push(vec);
            }
        }
    }
    kernel
}
