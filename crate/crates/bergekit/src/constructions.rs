//! Lower-bound constructions, expandable at any row count.
//!
//! Every construction the classifier can cite is a [`ConstructionRecipe`]
//! with an `expand(m)` and a size formula. When the part count does not
//! divide `m`, parts keep size `floor(m/p)` and the leftover rows are
//! appended as zero rows; growth rates and avoidance are unaffected.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::graph_of;
use crate::matrix::BitMatrix;
use crate::named;

/// Symbolic lower-bound construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ConstructionRecipe {
    /// `p`-fold product of identities on near-equal parts.
    IdentityProduct { p: usize },
    /// The boundary matrix H(p,k,t).
    HpktMatrix { p: usize, k: usize, t: usize },
    /// The general boundary matrix H((a_1..a_s),t).
    GeneralH { parts: Vec<usize>, t: usize },
    /// `K_k` padded with zero rows; the constant-case extremal construction.
    KcliqueConstant { k: usize },
    /// One of the named extremal constructions: "ik", "g1", "h2".
    Catalog { name: String, k: usize },
    /// The matrix with no columns; the only avoider of an all-zero target.
    Empty,
}

impl ConstructionRecipe {
    /// Expands the recipe to exactly `m` rows.
    pub fn expand(&self, m: usize) -> Result<BitMatrix> {
        match self {
            ConstructionRecipe::IdentityProduct { p } => expand_product(*p, m),
            ConstructionRecipe::HpktMatrix { p, k, t } => named::make_h(*p, *k, *t)?.pad_rows(m),
            ConstructionRecipe::GeneralH { parts, t } => {
                named::make_general_h(parts, *t)?.pad_rows(m)
            }
            ConstructionRecipe::KcliqueConstant { k } => {
                if m < k + 1 {
                    return Err(Error::BadParameter {
                        op: "KcliqueConstant",
                        param: "m",
                    });
                }
                if *k == 0 {
                    return BitMatrix::new(m, vec![0]);
                }
                named::complete(*k).pad_rows(m)
            }
            ConstructionRecipe::Catalog { name, k } => match name.as_str() {
                "ik" => ik_extremal(*k, m),
                "g1" => g1_extremal(m),
                "h2" => h2_extremal(m),
                _ => Err(Error::BadParameter {
                    op: "Catalog::expand",
                    param: "name",
                }),
            },
            ConstructionRecipe::Empty => BitMatrix::empty(m),
        }
    }

    /// Column count of `expand(m)`; matches the expansion exactly.
    pub fn size(&self, m: usize) -> usize {
        match self {
            ConstructionRecipe::IdentityProduct { p } => (m / p).pow(*p as u32),
            ConstructionRecipe::HpktMatrix { p, k, t } => {
                (k - p) + t * (1 + ((1usize << p) - 1) * (k - p + 1))
            }
            ConstructionRecipe::GeneralH { parts, t } => {
                let prod: usize = 1; // product block is simple, one column per part choice
                let _ = prod;
                let block: usize = parts.iter().product();
                let subs = named::make_general_h(parts, 1)
                    .map(|h| h.ncols() - block)
                    .unwrap_or(0);
                block + t * subs
            }
            ConstructionRecipe::KcliqueConstant { k } => 1 << k,
            ConstructionRecipe::Catalog { name, k } => match name.as_str() {
                "ik" => 1 << (k - 1),
                "g1" => 3 * m / 2 + 1,
                "h2" => 4 * (m / 3) + m + 1,
                _ => 0,
            },
            ConstructionRecipe::Empty => 0,
        }
    }
}

impl fmt::Display for ConstructionRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionRecipe::IdentityProduct { p } => write!(f, "product(p={p})"),
            ConstructionRecipe::HpktMatrix { p, k, t } => write!(f, "H(p={p},k={k},t={t})"),
            ConstructionRecipe::GeneralH { parts, t } => {
                let parts: Vec<String> = parts.iter().map(|a| a.to_string()).collect();
                write!(f, "generalH(parts=[{}],t={t})", parts.join(","))
            }
            ConstructionRecipe::KcliqueConstant { k } => write!(f, "kclique(k={k})"),
            ConstructionRecipe::Catalog { name, k } => match name.as_str() {
                "ik" => write!(f, "catalog(ik,k={k})"),
                _ => write!(f, "catalog({name})"),
            },
            ConstructionRecipe::Empty => write!(f, "empty"),
        }
    }
}

/// The `p`-fold product of identities on `m` rows: `p` parts of size
/// `floor(m/p)` plus `m mod p` zero rows. For `p | m` it has `(m/p)^p`
/// columns.
pub fn expand_product(p: usize, m: usize) -> Result<BitMatrix> {
    if p < 1 {
        return Err(Error::BadParameter {
            op: "expand_product",
            param: "p",
        });
    }
    if m < p {
        return Err(Error::BadParameter {
            op: "expand_product",
            param: "m",
        });
    }
    let part = m / p;
    let mut out = named::identity(part);
    for _ in 1..p {
        out = out.product(&named::identity(part))?;
    }
    out.pad_rows(m)
}

/// The clique-bound construction: the `(chi(G(F)) - 1)`-fold identity
/// product on `m` rows, guaranteed Berge-free of `F`. When `chi = 1` there
/// is no product and the single zero column is returned.
pub fn chi_construction(f: &BitMatrix, m: usize) -> Result<BitMatrix> {
    let chi = graph_of(f).chromatic_number()?;
    if chi <= 1 {
        return BitMatrix::new(m, vec![0]);
    }
    expand_product(chi - 1, m)
}

/// The extremal avoider of `I_k`: `K_{k-1}` with `m - k + 1` zero rows,
/// `2^{k-1}` columns.
pub fn ik_extremal(k: usize, m: usize) -> Result<BitMatrix> {
    if k < 1 {
        return Err(Error::BadParameter {
            op: "ik_extremal",
            param: "k",
        });
    }
    if m + 1 < k {
        return Err(Error::BadParameter {
            op: "ik_extremal",
            param: "m",
        });
    }
    if k == 1 {
        return BitMatrix::new(m, vec![0]);
    }
    named::complete(k - 1).pad_rows(m)
}

/// The extremal avoider of `G_1`: all columns of sum at most 1 plus
/// `floor(m/2)` pairwise disjoint columns of sum 2; `floor(3m/2) + 1` columns.
pub fn g1_extremal(m: usize) -> Result<BitMatrix> {
    if m < 2 {
        return Err(Error::BadParameter {
            op: "g1_extremal",
            param: "m",
        });
    }
    let mut cols: Vec<u64> = vec![0];
    cols.extend((0..m).map(|i| 1u64 << i));
    cols.extend((0..m / 2).map(|i| 0b11u64 << (2 * i)));
    BitMatrix::new(m, cols)
}

/// The extremal avoider of `H_2`: `floor(m/3)` disjoint columns of sum 3,
/// the three sum-2 columns under each, and all columns of sum at most 1;
/// `4*floor(m/3) + m + 1` columns.
pub fn h2_extremal(m: usize) -> Result<BitMatrix> {
    if m < 3 {
        return Err(Error::BadParameter {
            op: "h2_extremal",
            param: "m",
        });
    }
    let mut cols: Vec<u64> = vec![0];
    cols.extend((0..m).map(|i| 1u64 << i));
    for i in 0..m / 3 {
        let base = 3 * i;
        cols.push(0b111 << base);
        cols.push(0b011 << base);
        cols.push(0b101 << base);
        cols.push(0b110 << base);
    }
    BitMatrix::new(m, cols)
}
