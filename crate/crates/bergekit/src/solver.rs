//! Exact desk-scale extremal numbers.
//!
//! `solve_bh` maximizes the column count of a downset of `2^[m]` avoiding
//! `F` as a Berge hypergraph; by the shifting lemma this equals the
//! unrestricted maximum over all simple matrices. The search is depth-first
//! over subsets ordered by cardinality then colex, adding a subset only when
//! all its maximal proper subsets are present, so every ideal is generated
//! exactly once. Columns live in the universe `2^m <= 64`, so a candidate
//! family is a single `u64` and the incremental Berge test is pure word
//! arithmetic: for each injective row map the compatible columns of each
//! F-column form a precomputed superset mask, and column assignment is an
//! augmenting-path matching over those masks.
//!
//! `solve_bh_unrestricted` is the independent oracle: the same maximization
//! over arbitrary simple column sets with no downset structure and no
//! shifting argument, feasible for `m <= 4`.

use serde::Serialize;

use crate::containment::{berge_contains, config_contains};
use crate::error::{Error, Result};
use crate::matrix::BitMatrix;

/// Which search produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SolveMode {
    Downset,
    Unrestricted,
    Relative,
}

/// Exact maximum with a maximizing witness.
#[derive(Clone, Debug, Serialize)]
pub struct SolveResult {
    pub value: usize,
    #[serde(serialize_with = "crate::solver::serialize_witness")]
    pub witness: BitMatrix,
    pub nodes_explored: u64,
    pub mode: SolveMode,
}

pub(crate) fn serialize_witness<S: serde::Serializer>(
    w: &BitMatrix,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_literal())
}

/// Maximum downset search ceiling; ideal counts explode beyond six rows.
pub const DOWNSET_MAX_M: usize = 6;
/// Oracle search ceiling.
pub const UNRESTRICTED_MAX_M: usize = 4;
/// Relative search ceiling on the number of columns of `P`.
pub const RELATIVE_MAX_COLS: usize = 24;

/// Row maps from the rows of `F` into `[m]` with per-column image masks,
/// precomputed once per solve.
struct RowMaps {
    /// For each injective row map, the images of the F-columns in `2^[m]`.
    images: Vec<Vec<u64>>,
}

fn enumerate_row_maps(f: &BitMatrix, m: usize) -> RowMaps {
    let k = f.rows() as usize;
    let mut images = Vec::new();
    if k > m {
        return RowMaps { images };
    }
    let mut map = vec![0usize; k];
    let mut used = vec![false; m];
    fn rec(
        depth: usize,
        k: usize,
        m: usize,
        f: &BitMatrix,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        images: &mut Vec<Vec<u64>>,
    ) {
        if depth == k {
            let img = f
                .cols()
                .iter()
                .map(|&c| {
                    let mut out = 0u64;
                    let mut bits = c;
                    while bits != 0 {
                        let i = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        out |= 1 << map[i];
                    }
                    out
                })
                .collect();
            images.push(img);
            return;
        }
        for r in 0..m {
            if used[r] {
                continue;
            }
            used[r] = true;
            map[depth] = r;
            rec(depth + 1, k, m, f, map, used, images);
            used[r] = false;
        }
    }
    rec(0, k, m, f, &mut map, &mut used, &mut images);
    RowMaps { images }
}

/// Shared incremental machinery over the column universe `0..2^m`.
struct Universe {
    size: usize,
    /// `sup[s]` = bitmask over the universe of all supersets of `s`.
    sup: Vec<u64>,
    /// Subsets ordered by (cardinality, colex); `order[idx]` is a subset.
    order: Vec<usize>,
}

impl Universe {
    fn new(m: usize) -> Universe {
        let size = 1usize << m;
        let mut sup = vec![0u64; size];
        for (s, entry) in sup.iter_mut().enumerate() {
            for t in 0..size {
                if t & s == s {
                    *entry |= 1 << t;
                }
            }
        }
        let mut order: Vec<usize> = (0..size).collect();
        order.sort_by_key(|&s| (s.count_ones(), s));
        Universe { size, sup, order }
    }

    /// True iff every maximal proper subset of `s` is in the family.
    fn addable(&self, family: u64, s: usize) -> bool {
        let mut bits = s;
        while bits != 0 {
            let i = bits.trailing_zeros();
            bits &= bits - 1;
            if family >> (s ^ (1 << i)) & 1 == 0 {
                return false;
            }
        }
        true
    }
}

/// Matching over column masks: left vertices are the columns of `F`, the
/// adjacency of each is a `u64` of compatible universe columns.
fn has_perfect_matching(adj: &[u64]) -> bool {
    let mut owner = [usize::MAX; 64];
    let mut assigned = 0u64;
    for start in 0..adj.len() {
        // BFS-free simple Kuhn with an explicit stack of (left, tried-mask)
        let mut seen = 0u64;
        if !kuhn_augment(start, adj, &mut owner, &mut seen, &mut assigned) {
            return false;
        }
    }
    true
}

fn kuhn_augment(
    j: usize,
    adj: &[u64],
    owner: &mut [usize; 64],
    seen: &mut u64,
    assigned: &mut u64,
) -> bool {
    let mut options = adj[j] & !*seen;
    while options != 0 {
        let c = options.trailing_zeros() as usize;
        options &= options - 1;
        *seen |= 1 << c;
        if *assigned >> c & 1 == 0 || kuhn_augment(owner[c], adj, owner, seen, assigned) {
            owner[c] = j;
            *assigned |= 1 << c;
            return true;
        }
    }
    false
}

/// Does the family together with new column `cand` contain `F`?
/// The family alone is known to avoid `F`, so any embedding must use `cand`.
fn creates_berge(maps: &RowMaps, uni: &Universe, family: u64, cand: usize) -> bool {
    let with = family | 1u64 << cand;
    let cand_bit = 1u64 << cand;
    for images in &maps.images {
        // the new column must dominate some F-column image
        if !images
            .iter()
            .any(|&img| uni.sup[img as usize] & cand_bit != 0)
        {
            continue;
        }
        let mut feasible = true;
        let mut adj = Vec::with_capacity(images.len());
        for &img in images {
            let a = uni.sup[img as usize] & with;
            if a == 0 {
                feasible = false;
                break;
            }
            adj.push(a);
        }
        if feasible && has_perfect_matching(&adj) {
            return true;
        }
    }
    false
}

struct DownsetSearch<'a> {
    uni: &'a Universe,
    maps: &'a RowMaps,
    nodes: u64,
    best: usize,
    best_family: u64,
}

impl DownsetSearch<'_> {
    /// Optimistic completion bound: members plus every later candidate whose
    /// chain of maximal subsets can still be completed from non-poisoned
    /// candidates.
    fn bound(&self, family: u64, next_idx: usize, poisoned: u64) -> usize {
        let mut feasible = family;
        let mut count = (family.count_ones()) as usize;
        for idx in next_idx..self.uni.size {
            let s = self.uni.order[idx];
            if poisoned >> s & 1 == 1 {
                continue;
            }
            if self.uni.addable(feasible, s) {
                feasible |= 1 << s;
                count += 1;
            }
        }
        count
    }

    fn dfs(&mut self, family: u64, next_idx: usize, poisoned: u64) {
        self.nodes += 1;
        let size = family.count_ones() as usize;
        if size > self.best {
            self.best = size;
            self.best_family = family;
        }
        if self.bound(family, next_idx, poisoned) <= self.best {
            return;
        }
        let mut poisoned = poisoned;
        for idx in next_idx..self.uni.size {
            let s = self.uni.order[idx];
            if poisoned >> s & 1 == 1 || !self.uni.addable(family, s) {
                continue;
            }
            if creates_berge(self.maps, self.uni, family, s) {
                // supersets of the family keep creating F through s
                poisoned |= 1 << s;
                continue;
            }
            self.dfs(family | 1 << s, idx + 1, poisoned);
            if self.bound(family, idx + 1, poisoned) <= self.best {
                return;
            }
        }
    }
}

fn family_matrix(m: usize, family: u64, uni: &Universe) -> BitMatrix {
    let mut cols: Vec<u64> = Vec::with_capacity(family.count_ones() as usize);
    for idx in 0..uni.size {
        let s = uni.order[idx];
        if family >> s & 1 == 1 {
            cols.push(s as u64);
        }
    }
    BitMatrix::new(m, cols).expect("family columns in range")
}

fn require_columns(f: &BitMatrix) -> Result<()> {
    if f.ncols() == 0 {
        // a 0-column F embeds in everything, so there is nothing to maximize
        return Err(Error::BadParameter {
            op: "solver",
            param: "F needs at least one column",
        });
    }
    Ok(())
}

/// Exact `Bh(m, F)` by branch-and-bound over downsets.
pub fn solve_bh(f: &BitMatrix, m: usize) -> Result<SolveResult> {
    require_columns(f)?;
    if !(1..=DOWNSET_MAX_M).contains(&m) {
        return Err(Error::SearchLimit(format!(
            "downset mode needs 1 <= m <= {DOWNSET_MAX_M}, got {m}"
        )));
    }
    let uni = Universe::new(m);
    let maps = enumerate_row_maps(f, m);
    let mut search = DownsetSearch {
        uni: &uni,
        maps: &maps,
        nodes: 0,
        best: 0,
        best_family: 0,
    };
    search.dfs(0, 0, 0);
    let witness = family_matrix(m, search.best_family, &uni);
    debug_assert!(berge_contains(f, &witness).is_none());
    Ok(SolveResult {
        value: search.best,
        witness,
        nodes_explored: search.nodes,
        mode: SolveMode::Downset,
    })
}

struct SubsetSearch<'a> {
    uni: &'a Universe,
    maps: &'a RowMaps,
    nodes: u64,
    best: usize,
    best_family: u64,
}

impl SubsetSearch<'_> {
    fn dfs(&mut self, family: u64, next_idx: usize, poisoned: u64) {
        self.nodes += 1;
        let size = family.count_ones() as usize;
        if size > self.best {
            self.best = size;
            self.best_family = family;
        }
        let mut poisoned = poisoned;
        for idx in next_idx..self.uni.size {
            let remaining = self.uni.size - idx;
            if size + remaining <= self.best {
                return;
            }
            let s = self.uni.order[idx];
            if poisoned >> s & 1 == 1 {
                continue;
            }
            if creates_berge(self.maps, self.uni, family, s) {
                poisoned |= 1 << s;
                continue;
            }
            self.dfs(family | 1 << s, idx + 1, poisoned);
        }
    }
}

/// Exact `Bh(m, F)` over all simple matrices; the oracle for [`solve_bh`].
pub fn solve_bh_unrestricted(f: &BitMatrix, m: usize) -> Result<SolveResult> {
    require_columns(f)?;
    if !(1..=UNRESTRICTED_MAX_M).contains(&m) {
        return Err(Error::SearchLimit(format!(
            "unrestricted mode needs 1 <= m <= {UNRESTRICTED_MAX_M}, got {m}"
        )));
    }
    let uni = Universe::new(m);
    let maps = enumerate_row_maps(f, m);
    let mut search = SubsetSearch {
        uni: &uni,
        maps: &maps,
        nodes: 0,
        best: 0,
        best_family: 0,
    };
    search.dfs(0, 0, 0);
    let witness = family_matrix(m, search.best_family, &uni);
    debug_assert!(berge_contains(f, &witness).is_none());
    Ok(SolveResult {
        value: search.best,
        witness,
        nodes_explored: search.nodes,
        mode: SolveMode::Unrestricted,
    })
}

/// Exact `forb(m, family)`: maximum simple matrix avoiding every member as a
/// configuration. Uses the subset search with a configuration test.
pub fn solve_forb_family(family: &[BitMatrix], m: usize) -> Result<SolveResult> {
    for f in family {
        require_columns(f)?;
    }
    if !(1..=UNRESTRICTED_MAX_M).contains(&m) {
        return Err(Error::SearchLimit(format!(
            "family mode needs 1 <= m <= {UNRESTRICTED_MAX_M}, got {m}"
        )));
    }
    let uni = Universe::new(m);
    let mut search = ForbSearch {
        uni: &uni,
        members: family,
        m,
        nodes: 0,
        best: 0,
        best_family: 0,
    };
    search.dfs(0, 0, 0);
    let witness = family_matrix(m, search.best_family, &uni);
    debug_assert!(family
        .iter()
        .all(|f| config_contains(f, &witness).is_none()));
    Ok(SolveResult {
        value: search.best,
        witness,
        nodes_explored: search.nodes,
        mode: SolveMode::Unrestricted,
    })
}

struct ForbSearch<'a> {
    uni: &'a Universe,
    members: &'a [BitMatrix],
    m: usize,
    nodes: u64,
    best: usize,
    best_family: u64,
}

impl ForbSearch<'_> {
    fn creates_config(&self, family: u64, cand: usize) -> bool {
        let with = family_matrix(self.m, family | 1 << cand, self.uni);
        self.members
            .iter()
            .any(|f| config_contains(f, &with).is_some())
    }

    fn dfs(&mut self, family: u64, next_idx: usize, poisoned: u64) {
        self.nodes += 1;
        let size = family.count_ones() as usize;
        if size > self.best {
            self.best = size;
            self.best_family = family;
        }
        let mut poisoned = poisoned;
        for idx in next_idx..self.uni.size {
            let remaining = self.uni.size - idx;
            if size + remaining <= self.best {
                return;
            }
            let s = self.uni.order[idx];
            if poisoned >> s & 1 == 1 {
                continue;
            }
            if self.creates_config(family, s) {
                poisoned |= 1 << s;
                continue;
            }
            self.dfs(family | 1 << s, idx + 1, poisoned);
        }
    }
}

/// `f(F, P)`: the largest column subset of `P` avoiding `F` as a Berge
/// hypergraph.
pub fn solve_relative(f: &BitMatrix, p: &BitMatrix) -> Result<SolveResult> {
    require_columns(f)?;
    if p.ncols() > RELATIVE_MAX_COLS {
        return Err(Error::SearchLimit(format!(
            "relative mode needs ||P|| <= {RELATIVE_MAX_COLS}, got {}",
            p.ncols()
        )));
    }
    let mut search = RelativeSearch {
        f,
        p,
        chosen: Vec::new(),
        nodes: 0,
        best: 0,
        best_cols: Vec::new(),
    };
    search.dfs(0);
    let witness = BitMatrix::new(p.rows() as usize, search.best_cols.clone())?;
    debug_assert!(berge_contains(f, &witness).is_none());
    Ok(SolveResult {
        value: search.best,
        witness,
        nodes_explored: search.nodes,
        mode: SolveMode::Relative,
    })
}

struct RelativeSearch<'a> {
    f: &'a BitMatrix,
    p: &'a BitMatrix,
    chosen: Vec<u64>,
    nodes: u64,
    best: usize,
    best_cols: Vec<u64>,
}

impl RelativeSearch<'_> {
    fn dfs(&mut self, next: usize) {
        self.nodes += 1;
        if self.chosen.len() > self.best {
            self.best = self.chosen.len();
            self.best_cols = self.chosen.clone();
        }
        for idx in next..self.p.ncols() {
            if self.chosen.len() + (self.p.ncols() - idx) <= self.best {
                return;
            }
            self.chosen.push(self.p.col(idx));
            let candidate =
                BitMatrix::new(self.p.rows() as usize, self.chosen.clone()).expect("P columns");
            // avoidance is monotone: once F appears, no superset helps
            if berge_contains(self.f, &candidate).is_none() {
                self.dfs(idx + 1);
            }
            self.chosen.pop();
        }
    }
}
