//! Standard small semigroups and groups with stable element names.
//!
//! Naming:
//! - `cyclic:n`, `leftzero:n`, `rightzero:n`, `null:n`: `0 .. n-1`
//!   (for `null:n` the zero is `0`).
//! - `klein4`: `e a b c`, with `ab = c`.
//! - `symmetric:n`, `alternating:n`: one-line notation (`132` maps
//!   1→1, 2→3, 3→2), sorted lexicographically.
//! - `dihedral:n`: `r^0 .. r^(n-1)` then `r^0.s .. r^(n-1).s`, where
//!   `r^i.s` is `r^i * s` and `s r = r^-1 s`.
//! - `quaternion8`: `1 -1 i -i j -j k -k`.
//! - `fulltransformation:n`: image lists, e.g. `21` maps 1→2, 2→1.
//! - `directproduct:A,B`: `(x;y)` in row-major order of the factors.
//!
//! Permutations and transformations act on the right: `x * y` applies
//! `x` first, then `y`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

const MAX_ORDER: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    Cyclic(usize),
    Klein4,
    Symmetric(usize),
    Alternating(usize),
    Dihedral(usize),
    Quaternion8,
    LeftZero(usize),
    RightZero(usize),
    Null(usize),
    FullTransformation(usize),
    DirectProduct(Box<Family>, Box<Family>),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "cyclic:{n}"),
            Family::Klein4 => f.write_str("klein4"),
            Family::Symmetric(n) => write!(f, "symmetric:{n}"),
            Family::Alternating(n) => write!(f, "alternating:{n}"),
            Family::Dihedral(n) => write!(f, "dihedral:{n}"),
            Family::Quaternion8 => f.write_str("quaternion8"),
            Family::LeftZero(n) => write!(f, "leftzero:{n}"),
            Family::RightZero(n) => write!(f, "rightzero:{n}"),
            Family::Null(n) => write!(f, "null:{n}"),
            Family::FullTransformation(n) => write!(f, "fulltransformation:{n}"),
            Family::DirectProduct(a, b) => write!(f, "directproduct:({a}),({b})"),
        }
    }
}

fn param_error(family: &str, message: impl Into<String>) -> Error {
    Error::FamilyParameter {
        family: family.to_string(),
        message: message.into(),
    }
}

fn parse_param(family: &str, arg: Option<&str>, lo: usize, hi: usize) -> Result<usize> {
    let arg = arg.ok_or_else(|| param_error(family, "missing parameter"))?;
    let n: usize = arg
        .parse()
        .map_err(|_| param_error(family, format!("`{arg}` is not a non-negative integer")))?;
    if n < lo || n > hi {
        return Err(param_error(family, format!("parameter {n} outside {lo}..={hi}")));
    }
    Ok(n)
}

/// Splits `A,B` at the first comma outside parentheses, stripping one
/// layer of enclosing parentheses from each side.
fn split_product(arg: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, ch) in arg.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                return Some((strip_parens(&arg[..i]), strip_parens(&arg[i + 1..])));
            }
            _ => {}
        }
    }
    None
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    s.strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(s)
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        let (name, arg) = match spec.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (spec, None),
        };
        let no_arg = |f: Family| {
            if arg.is_some() {
                Err(param_error(name, "takes no parameter"))
            } else {
                Ok(f)
            }
        };
        match name {
            "cyclic" => Ok(Family::Cyclic(parse_param(name, arg, 1, MAX_ORDER)?)),
            "klein4" => no_arg(Family::Klein4),
            "symmetric" => Ok(Family::Symmetric(parse_param(name, arg, 1, 4)?)),
            "alternating" => Ok(Family::Alternating(parse_param(name, arg, 1, 4)?)),
            "dihedral" => Ok(Family::Dihedral(parse_param(name, arg, 1, MAX_ORDER / 2)?)),
            "quaternion8" => no_arg(Family::Quaternion8),
            "leftzero" => Ok(Family::LeftZero(parse_param(name, arg, 1, MAX_ORDER)?)),
            "rightzero" => Ok(Family::RightZero(parse_param(name, arg, 1, MAX_ORDER)?)),
            "null" => Ok(Family::Null(parse_param(name, arg, 1, MAX_ORDER)?)),
            "fulltransformation" => Ok(Family::FullTransformation(parse_param(name, arg, 1, 3)?)),
            "directproduct" => {
                let arg = arg.ok_or_else(|| param_error(name, "expected two factors"))?;
                let (a, b) = split_product(arg)
                    .ok_or_else(|| param_error(name, "expected `A,B`"))?;
                let (a, b): (Family, Family) = (a.parse()?, b.parse()?);
                if a.order() * b.order() > MAX_ORDER {
                    return Err(param_error(name, format!("order exceeds {MAX_ORDER}")));
                }
                Ok(Family::DirectProduct(Box::new(a), Box::new(b)))
            }
            _ => Err(Error::UnknownFamily(name.to_string())),
        }
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl Family {
    pub fn order(&self) -> usize {
        match self {
            Family::Cyclic(n)
            | Family::LeftZero(n)
            | Family::RightZero(n)
            | Family::Null(n) => *n,
            Family::Klein4 => 4,
            Family::Symmetric(n) => factorial(*n),
            Family::Alternating(n) => factorial(*n).div_ceil(2),
            Family::Dihedral(n) => 2 * n,
            Family::Quaternion8 => 8,
            Family::FullTransformation(n) => n.pow(*n as u32),
            Family::DirectProduct(a, b) => a.order() * b.order(),
        }
    }

    pub fn build(&self) -> Result<Semigroup> {
        match self {
            Family::Cyclic(n) => Semigroup::from_fn(numbered(*n), |i, j| (i + j) % n),
            Family::Klein4 => Semigroup::from_fn(
                ["e", "a", "b", "c"].map(String::from).to_vec(),
                |i, j| i ^ j,
            ),
            Family::Symmetric(n) => maps_semigroup(permutations(*n)),
            Family::Alternating(n) => maps_semigroup(
                permutations(*n)
                    .into_iter()
                    .filter(|p| is_even(p))
                    .collect(),
            ),
            Family::Dihedral(n) => dihedral(*n),
            Family::Quaternion8 => quaternion8(),
            Family::LeftZero(n) => Semigroup::from_fn(numbered(*n), |i, _| i),
            Family::RightZero(n) => Semigroup::from_fn(numbered(*n), |_, j| j),
            Family::Null(n) => Semigroup::from_fn(numbered(*n), |_, _| 0),
            Family::FullTransformation(n) => maps_semigroup(transformations(*n)),
            Family::DirectProduct(a, b) => {
                let (a, b) = (a.build()?, b.build()?);
                let m = b.order();
                let names = a
                    .elements()
                    .flat_map(|i| b.elements().map(move |j| (i, j)))
                    .map(|(i, j)| format!("({};{})", a.name(i), b.name(j)))
                    .collect();
                Semigroup::from_fn(names, |x, y| {
                    a.mul(x / m, y / m) * m + b.mul(x % m, y % m)
                })
            }
        }
    }
}

pub fn make_family(spec: &str) -> Result<Semigroup> {
    spec.parse::<Family>()?.build()
}

/// Groups exercised by the verification suites.
pub fn group_catalog() -> Vec<Family> {
    let mut out: Vec<Family> = (1..=8).map(Family::Cyclic).collect();
    out.extend([
        Family::Klein4,
        Family::Symmetric(3),
        Family::Dihedral(4),
        Family::Quaternion8,
        Family::Alternating(4),
    ]);
    out
}

/// Non-group semigroups exercised by the verification suites.
pub fn non_group_catalog() -> Vec<Family> {
    vec![
        Family::LeftZero(3),
        Family::RightZero(3),
        Family::Null(3),
        Family::FullTransformation(2),
        Family::DirectProduct(Box::new(Family::Cyclic(2)), Box::new(Family::LeftZero(2))),
    ]
}

fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// All maps `{0..n} -> {0..n}` as image vectors, in lexicographic order.
fn transformations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..n).map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    transformations(n)
        .into_iter()
        .filter(|f| {
            let mut seen = vec![false; n];
            f.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
        })
        .collect()
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

/// Semigroup of maps under "first `x`, then `y`".
fn maps_semigroup(maps: Vec<Vec<usize>>) -> Result<Semigroup> {
    let names = maps
        .iter()
        .map(|f| f.iter().map(|x| (x + 1).to_string()).collect::<String>())
        .collect();
    let index = |f: &Vec<usize>| maps.iter().position(|g| g == f).expect("closed under composition");
    Semigroup::from_fn(names, |x, y| {
        let composed: Vec<usize> = maps[x].iter().map(|&i| maps[y][i]).collect();
        index(&composed)
    })
}

fn dihedral(n: usize) -> Result<Semigroup> {
    let mut names: Vec<String> = (0..n).map(|i| format!("r^{i}")).collect();
    names.extend((0..n).map(|i| format!("r^{i}.s")));
    // element k = r^(k mod n) s^(k / n)
    Semigroup::from_fn(names, |x, y| {
        let (i, a) = (x % n, x / n);
        let (j, b) = (y % n, y / n);
        let rot = if a == 0 { (i + j) % n } else { (i + n - j) % n };
        ((a + b) % 2) * n + rot
    })
}

fn quaternion8() -> Result<Semigroup> {
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .map(String::from)
        .to_vec();
    // unit products: UNIT[u][v] = (sign, unit) with units 1, i, j, k
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    Semigroup::from_fn(names, |x, y| {
        let (sx, ux) = (x % 2 == 1, x / 2);
        let (sy, uy) = (y % 2 == 1, y / 2);
        let (s, u) = UNIT[ux][uy];
        2 * u + usize::from(s ^ sx ^ sy)
    })
}
