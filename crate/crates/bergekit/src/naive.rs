//! Reference containment checkers by full enumeration.
//!
//! These enumerate every injective row map and every injective column map
//! directly, with no pruning and no matching, and exist solely to
//! cross-check the production checkers. Keep them dumb.

use crate::containment::Mode;
use crate::matrix::BitMatrix;

/// Full-enumeration containment test. Exponential; use on desk-scale input.
pub fn naive_contains(f: &BitMatrix, a: &BitMatrix, mode: Mode) -> bool {
    let k = f.rows() as usize;
    let m = a.rows() as usize;
    let l = f.ncols();
    let n = a.ncols();
    if k > m || l > n {
        return false;
    }
    let mut row_map = Vec::with_capacity(k);
    enumerate_rows(f, a, mode, &mut row_map, &mut vec![false; m])
}

fn enumerate_rows(
    f: &BitMatrix,
    a: &BitMatrix,
    mode: Mode,
    row_map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if row_map.len() == f.rows() as usize {
        let mut col_map = Vec::with_capacity(f.ncols());
        return enumerate_cols(
            f,
            a,
            mode,
            row_map,
            &mut col_map,
            &mut vec![false; a.ncols()],
        );
    }
    for r in 0..a.rows() as usize {
        if used[r] {
            continue;
        }
        used[r] = true;
        row_map.push(r);
        if enumerate_rows(f, a, mode, row_map, used) {
            return true;
        }
        row_map.pop();
        used[r] = false;
    }
    false
}

fn enumerate_cols(
    f: &BitMatrix,
    a: &BitMatrix,
    mode: Mode,
    row_map: &[usize],
    col_map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let j = col_map.len();
    if j == f.ncols() {
        return true;
    }
    'next: for c in 0..a.ncols() {
        if used[c] {
            continue;
        }
        for (i, &r) in row_map.iter().enumerate() {
            let fe = f.entry(i, j);
            let ae = a.entry(r, c);
            let ok = match mode {
                Mode::Berge => !fe || ae,
                Mode::Config => fe == ae,
            };
            if !ok {
                continue 'next;
            }
        }
        used[c] = true;
        col_map.push(c);
        if enumerate_cols(f, a, mode, row_map, col_map, used) {
            return true;
        }
        col_map.pop();
        used[c] = false;
    }
    false
}
