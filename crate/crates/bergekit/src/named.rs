//! The catalog of named matrices and the boundary families H(p,k,t) and
//! H((a_1..a_s),t).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::{BitMatrix, MAX_ROWS};

/// `I_k`, the k x k identity.
pub fn identity(k: usize) -> BitMatrix {
    BitMatrix::new(k, (0..k).map(|i| 1u64 << i).collect()).expect("identity row range")
}

/// `K_k^l`, all columns with exactly `l` ones on `k` rows, ascending mask order.
pub fn k_choose(k: usize, l: usize) -> BitMatrix {
    let cols = (0u64..1 << k)
        .filter(|c| c.count_ones() as usize == l)
        .collect();
    BitMatrix::new(k, cols).expect("k_choose row range")
}

/// `K_k = [K_k^0 K_k^1 ... K_k^k]`, grouped by column sum.
pub fn complete(k: usize) -> BitMatrix {
    let mut cols: Vec<u64> = (0u64..1 << k).collect();
    cols.sort_by_key(|c| (c.count_ones(), *c));
    BitMatrix::new(k, cols).expect("complete row range")
}

/// The single column of `a` ones on top of `b` zeros.
pub fn ones(a: usize, b: usize) -> BitMatrix {
    BitMatrix::new(a + b, vec![(1u64 << a) - 1]).expect("ones row range")
}

pub fn g1() -> BitMatrix {
    BitMatrix::parse_literal("110,101").unwrap()
}

pub fn g2() -> BitMatrix {
    BitMatrix::parse_literal("110,101,011").unwrap()
}

/// `C_4 = I_2 x I_2`, the vertex-edge incidence matrix of the 4-cycle.
pub fn c4() -> BitMatrix {
    identity(2).product(&identity(2)).unwrap()
}

/// The ten 4- to 6-rowed reference matrices H_1..H_10.
pub fn h(index: usize) -> BitMatrix {
    let lit = match index {
        1 => "1100,0110,0011",
        2 => "1100,1010,1001",
        3 => "1110,1101",
        4 => "1100,1010,1001,0110,0101",
        5 => "1110,1101,0111",
        6 => "1110,1101,0011",
        7 => "1110,1001,0101,0011",
        8 => "1100,0011",
        9 => "110000,001100,000011",
        10 => "11000,10100,00011",
        _ => panic!("H index out of range: {index}"),
    };
    BitMatrix::parse_literal(lit).unwrap()
}

pub fn f7() -> BitMatrix {
    BitMatrix::parse_literal("11000,10100,01010,11100,11001,01110").unwrap()
}

/// `H(p,k,t) = [1_p x I_{k-p} | t.[1_p x 0_{k-p} | (K_p \ 1_p) x [0_{k-p} I_{k-p}]]]`.
///
/// Column count `(k-p) + t(1 + (2^p - 1)(k-p+1))`.
pub fn make_h(p: usize, k: usize, t: usize) -> Result<BitMatrix> {
    if p < 1 || p >= k {
        return Err(Error::BadParameter {
            op: "make_h",
            param: "p",
        });
    }
    if t < 1 {
        return Err(Error::BadParameter {
            op: "make_h",
            param: "t",
        });
    }
    if k > MAX_ROWS as usize {
        return Err(Error::TooManyRows(k));
    }
    let head = ones(p, 0).product(&identity(k - p))?;
    let spike = ones(p, 0).product(&ones(0, k - p))?;
    let k_minus_top = {
        let full = (1u64 << p) - 1;
        let cols = complete(p)
            .cols()
            .iter()
            .copied()
            .filter(|&c| c != full)
            .collect();
        BitMatrix::new(p, cols)?
    };
    let tail = k_minus_top.product(&ones(0, k - p).concat(&identity(k - p))?)?;
    let block = spike.concat(&tail)?;
    head.concat(&block.t_fold(t))
}

/// `H((a_1..a_s),t) = [I_{a_1} x ... x I_{a_s} | t.S(product)]`.
pub fn make_general_h(parts: &[usize], t: usize) -> Result<BitMatrix> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::BadParameter {
            op: "make_general_h",
            param: "parts",
        });
    }
    if t < 1 {
        return Err(Error::BadParameter {
            op: "make_general_h",
            param: "t",
        });
    }
    let total: usize = parts.iter().sum();
    if total > MAX_ROWS as usize {
        return Err(Error::TooManyRows(total));
    }
    let mut prod = identity(parts[0]);
    for &a in &parts[1..] {
        prod = prod.product(&identity(a))?;
    }
    let subs = prod.strict_subcolumns();
    prod.concat(&subs.t_fold(t))
}

/// A matrix name as accepted on the command line and printed by `catalog`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedMatrix {
    Identity(usize),
    KChoose(usize, usize),
    Complete(usize),
    G1,
    G2,
    H(usize),
    F7,
    C4,
    Ones(usize, usize),
    /// `block(t, F)`: `t` concatenated copies of a named matrix.
    Block(usize, Box<NamedMatrix>),
}

impl NamedMatrix {
    pub fn expand(&self) -> BitMatrix {
        match self {
            NamedMatrix::Identity(k) => identity(*k),
            NamedMatrix::KChoose(k, l) => k_choose(*k, *l),
            NamedMatrix::Complete(k) => complete(*k),
            NamedMatrix::G1 => g1(),
            NamedMatrix::G2 => g2(),
            NamedMatrix::H(i) => h(*i),
            NamedMatrix::F7 => f7(),
            NamedMatrix::C4 => c4(),
            NamedMatrix::Ones(a, b) => ones(*a, *b),
            NamedMatrix::Block(t, inner) => inner.expand().t_fold(*t),
        }
    }
}

impl fmt::Display for NamedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedMatrix::Identity(k) => write!(f, "I{k}"),
            NamedMatrix::KChoose(k, l) => write!(f, "K{k}^{l}"),
            NamedMatrix::Complete(k) => write!(f, "K{k}"),
            NamedMatrix::G1 => write!(f, "G1"),
            NamedMatrix::G2 => write!(f, "G2"),
            NamedMatrix::H(i) => write!(f, "H{i}"),
            NamedMatrix::F7 => write!(f, "F7"),
            NamedMatrix::C4 => write!(f, "C4"),
            NamedMatrix::Ones(a, b) => write!(f, "ones({a},{b})"),
            NamedMatrix::Block(t, inner) => write!(f, "{t}*{inner}"),
        }
    }
}

impl FromStr for NamedMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::BadParameter {
            op: "NamedMatrix::from_str",
            param: "name",
        };
        if let Some((t, rest)) = s.split_once('*') {
            let t: usize = t.parse().map_err(|_| bad())?;
            if t == 0 {
                return Err(bad());
            }
            return Ok(NamedMatrix::Block(t, Box::new(rest.parse()?)));
        }
        match s {
            "G1" => return Ok(NamedMatrix::G1),
            "G2" => return Ok(NamedMatrix::G2),
            "F7" => return Ok(NamedMatrix::F7),
            "C4" => return Ok(NamedMatrix::C4),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("ones(") {
            let rest = rest.strip_suffix(')').ok_or_else(bad)?;
            let (a, b) = rest.split_once(',').ok_or_else(bad)?;
            let a = a.trim().parse().map_err(|_| bad())?;
            let b = b.trim().parse().map_err(|_| bad())?;
            if a + b == 0 || a + b > MAX_ROWS as usize {
                return Err(bad());
            }
            return Ok(NamedMatrix::Ones(a, b));
        }
        if let Some(num) = s.strip_prefix('I') {
            let k: usize = num.parse().map_err(|_| bad())?;
            if k == 0 || k > MAX_ROWS as usize {
                return Err(bad());
            }
            return Ok(NamedMatrix::Identity(k));
        }
        if let Some(num) = s.strip_prefix('H') {
            let i: usize = num.parse().map_err(|_| bad())?;
            if !(1..=10).contains(&i) {
                return Err(bad());
            }
            return Ok(NamedMatrix::H(i));
        }
        if let Some(rest) = s.strip_prefix('K') {
            if let Some((k, l)) = rest.split_once('^') {
                let k: usize = k.parse().map_err(|_| bad())?;
                let l: usize = l.parse().map_err(|_| bad())?;
                if k == 0 || k > 20 || l > k {
                    return Err(bad());
                }
                return Ok(NamedMatrix::KChoose(k, l));
            }
            let k: usize = rest.parse().map_err(|_| bad())?;
            if k == 0 || k > 20 {
                return Err(bad());
            }
            return Ok(NamedMatrix::Complete(k));
        }
        Err(bad())
    }
}

/// The fixed catalog entries with their rulebook anchors.
pub fn catalog() -> Vec<(NamedMatrix, &'static str)> {
    let mut out = vec![
        (NamedMatrix::G1, "G1"),
        (NamedMatrix::G2, "classifyk=3"),
        (NamedMatrix::C4, "C4"),
    ];
    for i in 1..=10 {
        let anchor = match i {
            1 | 2 => "classifyk=4",
            8 => "H8",
            9 | 10 => "treeforb",
            _ => "classifyk=4",
        };
        out.push((NamedMatrix::H(i), anchor));
    }
    out.push((NamedMatrix::F7, "treeforb"));
    for k in 2..=5 {
        out.push((NamedMatrix::Identity(k), "Ik"));
    }
    out
}
