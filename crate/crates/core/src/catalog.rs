//! Named groups: cyclic, dihedral, symmetric, alternating, Q8, Klein four
//! and direct products of these.
//!
//! Accepted spellings (case-sensitive): `cyclic12`, `cyclic(12)`, `Z12`,
//! `C12`, `trivial`; `dihedral4`/`D4` (symmetries of a square, order 8);
//! `symmetric4`/`S4`; `alternating4`/`A4`; `quaternion8`/`Q8`;
//! `klein4`/`V4`; `direct_product(cyclic2,cyclic4)` or `Z2xZ4` / `Z2×Z4`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::set::MAX_ORDER;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Builtin {
    Cyclic(usize),
    /// Symmetries of a regular n-gon, order 2n.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion8,
    Klein4,
    DirectProduct(Vec<Builtin>),
}

impl Builtin {
    pub fn order(&self) -> usize {
        match self {
            Builtin::Cyclic(n) => *n,
            Builtin::Dihedral(n) => 2 * n,
            Builtin::Symmetric(n) => (1..=*n).product(),
            Builtin::Alternating(n) => ((1..=*n).product::<usize>() / 2).max(1),
            Builtin::Quaternion8 => 8,
            Builtin::Klein4 => 4,
            Builtin::DirectProduct(fs) => fs.iter().map(Builtin::order).product(),
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        if self.order() > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: self.order(),
                limit: MAX_ORDER,
            });
        }
        let g = match self {
            Builtin::Cyclic(n) => cyclic(*n)?,
            Builtin::Dihedral(n) => dihedral(*n)?,
            Builtin::Symmetric(n) => symmetric(*n)?,
            Builtin::Alternating(n) => alternating(*n)?,
            Builtin::Quaternion8 => quaternion8()?,
            Builtin::Klein4 => klein4()?,
            Builtin::DirectProduct(fs) => {
                let parts = fs.iter().map(Builtin::build).collect::<Result<Vec<_>>>()?;
                direct_product(&parts)?
            }
        };
        Ok(g.renamed(self.to_string()))
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Cyclic(n) => write!(f, "cyclic{n}"),
            Builtin::Dihedral(n) => write!(f, "dihedral{n}"),
            Builtin::Symmetric(n) => write!(f, "symmetric{n}"),
            Builtin::Alternating(n) => write!(f, "alternating{n}"),
            Builtin::Quaternion8 => f.write_str("quaternion8"),
            Builtin::Klein4 => f.write_str("klein4"),
            Builtin::DirectProduct(fs) => {
                let parts: Vec<String> = fs.iter().map(|b| b.to_string()).collect();
                write!(f, "direct_product({})", parts.join(","))
            }
        }
    }
}

/// Split on `sep` outside parentheses.
pub(crate) fn split_top_level(s: &str, sep: &[char]) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if depth == 0 && sep.contains(&c) {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    out.push(cur);
    out
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownName(s.to_owned());
        let s = s.trim();
        if let Some(inner) = s
            .strip_prefix("direct_product(")
            .and_then(|r| r.strip_suffix(')'))
        {
            let factors = split_top_level(inner, &[','])
                .iter()
                .map(|p| p.parse())
                .collect::<Result<Vec<Builtin>>>()?;
            if factors.is_empty() {
                return Err(unknown());
            }
            return Ok(Builtin::DirectProduct(factors));
        }
        let parts = split_top_level(s, &['x', '×']);
        if parts.len() > 1 {
            let factors = parts
                .iter()
                .map(|p| p.parse())
                .collect::<Result<Vec<Builtin>>>()
                .map_err(|_| unknown())?;
            return Ok(Builtin::DirectProduct(factors));
        }
        match s {
            "trivial" => return Ok(Builtin::Cyclic(1)),
            "quaternion8" | "Q8" => return Ok(Builtin::Quaternion8),
            "klein4" | "V4" => return Ok(Builtin::Klein4),
            _ => {}
        }
        let split = s
            .find(|c: char| c.is_ascii_digit() || c == '(')
            .ok_or_else(unknown)?;
        let (word, num) = s.split_at(split);
        let num = num
            .strip_prefix('(')
            .and_then(|n| n.strip_suffix(')'))
            .unwrap_or(num);
        let n: usize = num.parse().map_err(|_| unknown())?;
        let b = match word {
            "cyclic" | "Z" | "C" if n >= 1 => Builtin::Cyclic(n),
            "dihedral" | "D" if n >= 1 => Builtin::Dihedral(n),
            "symmetric" | "S" if (1..=5).contains(&n) => Builtin::Symmetric(n),
            "alternating" | "A" if (1..=5).contains(&n) => Builtin::Alternating(n),
            _ => return Err(unknown()),
        };
        Ok(b)
    }
}

/// Look up a group by catalog name.
pub fn builtin_group(name: &str) -> Result<FiniteGroup> {
    name.parse::<Builtin>()?.build()
}

/// Build every listed group, in order.
pub fn build_all(list: &[Builtin]) -> Result<Vec<FiniteGroup>> {
    list.iter().map(Builtin::build).collect()
}

/// The corpus the full verification suite runs over by default.
pub fn standard_corpus() -> Vec<Builtin> {
    let mut v: Vec<Builtin> = (1..=12).map(Builtin::Cyclic).collect();
    v.extend([
        Builtin::Klein4,
        Builtin::Symmetric(3),
        Builtin::Dihedral(4),
        Builtin::Quaternion8,
        Builtin::Dihedral(5),
        Builtin::Dihedral(6),
        Builtin::Alternating(4),
        Builtin::Symmetric(4),
        Builtin::DirectProduct(vec![Builtin::Cyclic(2), Builtin::Cyclic(4)]),
        Builtin::DirectProduct(vec![Builtin::Cyclic(2), Builtin::Cyclic(2), Builtin::Cyclic(2)]),
    ]);
    v
}

/// Every catalog family member of order at most `max_order`: cyclic,
/// dihedral (n ≥ 3), symmetric and alternating (n ≥ 3), Q8, and products
/// `Z_a × Z_b` with `a | b`, plus `Z2×Z2×Z2`. Sorted by order.
pub fn all_small(max_order: usize) -> Vec<Builtin> {
    let mut v: Vec<Builtin> = (1..=max_order).map(Builtin::Cyclic).collect();
    v.extend((3..).take_while(|n| 2 * n <= max_order).map(Builtin::Dihedral));
    v.extend((3..=5).map(Builtin::Symmetric).filter(|b| b.order() <= max_order));
    v.extend((4..=5).map(Builtin::Alternating).filter(|b| b.order() <= max_order));
    if max_order >= 8 {
        v.push(Builtin::Quaternion8);
    }
    for a in 2..=max_order {
        for b in (a..=max_order / a).filter(|b| b % a == 0) {
            v.push(Builtin::DirectProduct(vec![Builtin::Cyclic(a), Builtin::Cyclic(b)]));
        }
    }
    if max_order >= 8 {
        v.push(Builtin::DirectProduct(vec![Builtin::Cyclic(2); 3]));
    }
    v.sort_by_key(Builtin::order);
    v
}

fn cyclic(n: usize) -> Result<FiniteGroup> {
    let table = (0..n)
        .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u8))
        .collect();
    let inverse = (0..n).map(|a| ((n - a) % n) as u8).collect();
    let labels = (0..n).map(|a| a.to_string()).collect();
    FiniteGroup::from_parts(format!("cyclic{n}"), table, inverse, labels, None)
}

fn dihedral(n: usize) -> Result<FiniteGroup> {
    // r^k s^f at index k + n·f; (r^a s^f)(r^b s^g) = r^(a ± b) s^(f+g).
    let order = 2 * n;
    let idx = |k: usize, f: usize| k % n + n * (f % 2);
    let mut table = vec![0u8; order * order];
    for x in 0..order {
        let (a, f) = (x % n, x / n);
        for y in 0..order {
            let (b, g) = (y % n, y / n);
            let k = if f == 0 { a + b } else { a + n - b };
            table[x * order + y] = idx(k, f + g) as u8;
        }
    }
    let inverse = (0..order)
        .map(|x| {
            let (a, f) = (x % n, x / n);
            if f == 0 {
                idx(n - a, 0) as u8
            } else {
                x as u8
            }
        })
        .collect();
    let rot = |k: usize| match k {
        0 => String::new(),
        1 => "r".to_owned(),
        _ => format!("r^{k}"),
    };
    let labels = (0..order)
        .map(|x| {
            let (k, f) = (x % n, x / n);
            match (k, f) {
                (0, 0) => "e".to_owned(),
                (_, 0) => rot(k),
                _ => format!("{}s", rot(k)),
            }
        })
        .collect();
    FiniteGroup::from_parts(format!("dihedral{n}"), table, inverse, labels, None)
}

fn symmetric(n: usize) -> Result<FiniteGroup> {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::parse_cycles("(12)", n)?);
        let full: Vec<usize> = (2..=n).chain([1]).collect();
        gens.push(Permutation::from_one_line(&full)?);
    }
    FiniteGroup::from_permutations(n, &gens)
}

fn alternating(n: usize) -> Result<FiniteGroup> {
    let gens = (3..=n)
        .map(|k| Permutation::parse_cycles(&format!("(12{k})"), n))
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::from_permutations(n, &gens)
}

fn quaternion8() -> Result<FiniteGroup> {
    // Index 2u + s encodes (-1)^s · unit[u], units 1, i, j, k.
    const LABELS: [&str; 8] = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
    // unit product: (sign, unit)
    fn unit_mul(a: usize, b: usize) -> (usize, usize) {
        match (a, b) {
            (0, x) | (x, 0) => (0, x),
            (x, y) if x == y => (1, 0),
            (1, 2) => (0, 3),
            (2, 3) => (0, 1),
            (3, 1) => (0, 2),
            (2, 1) => (1, 3),
            (3, 2) => (1, 1),
            (1, 3) => (1, 2),
            _ => unreachable!(),
        }
    }
    let mut table = vec![0u8; 64];
    for x in 0..8 {
        for y in 0..8 {
            let (s, u) = unit_mul(x / 2, y / 2);
            let sign = (s + x % 2 + y % 2) % 2;
            table[x * 8 + y] = (2 * u + sign) as u8;
        }
    }
    let inverse = (0..8usize)
        .map(|x| if x < 2 { x as u8 } else { (x ^ 1) as u8 })
        .collect();
    FiniteGroup::from_parts(
        "quaternion8".into(),
        table,
        inverse,
        LABELS.iter().map(|s| s.to_string()).collect(),
        None,
    )
}

fn klein4() -> Result<FiniteGroup> {
    let table = (0..4u8).flat_map(|a| (0..4u8).map(move |b| a ^ b)).collect();
    FiniteGroup::from_parts(
        "klein4".into(),
        table,
        vec![0, 1, 2, 3],
        ["e", "a", "b", "c"].iter().map(|s| s.to_string()).collect(),
        None,
    )
}

/// Direct product with mixed-radix indexing (first factor most significant)
/// and tuple labels `(x,y,…)`.
pub fn direct_product(factors: &[FiniteGroup]) -> Result<FiniteGroup> {
    let order: usize = factors.iter().map(FiniteGroup::order).product();
    if order > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order,
            limit: MAX_ORDER,
        });
    }
    let digits = |mut x: usize| -> Vec<usize> {
        let mut d = vec![0; factors.len()];
        for (k, g) in factors.iter().enumerate().rev() {
            d[k] = x % g.order();
            x /= g.order();
        }
        d
    };
    let compose = |d: &[usize]| -> usize {
        d.iter()
            .zip(factors)
            .fold(0, |acc, (&x, g)| acc * g.order() + x)
    };
    let all: Vec<Vec<usize>> = (0..order).map(digits).collect();
    let mut table = vec![0u8; order * order];
    for (x, dx) in all.iter().enumerate() {
        for (y, dy) in all.iter().enumerate() {
            let d: Vec<usize> = factors
                .iter()
                .enumerate()
                .map(|(k, g)| g.mul(dx[k], dy[k]))
                .collect();
            table[x * order + y] = compose(&d) as u8;
        }
    }
    let inverse = all
        .iter()
        .map(|d| {
            let inv: Vec<usize> = factors
                .iter()
                .enumerate()
                .map(|(k, g)| g.inv(d[k]))
                .collect();
            compose(&inv) as u8
        })
        .collect();
    let labels = all
        .iter()
        .map(|d| {
            let parts: Vec<&str> = factors
                .iter()
                .enumerate()
                .map(|(k, g)| g.label(d[k]))
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let name = factors
        .iter()
        .map(|g| g.name())
        .collect::<Vec<_>>()
        .join("x");
    FiniteGroup::from_parts(name, table, inverse, labels, None)
}
