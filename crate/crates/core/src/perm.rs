//! Permutations on `{1..n}` and their cycle notation.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `{0..degree}`, stored as the image of each point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u8).collect(),
        }
    }

    /// From one-line form with 1-based images, e.g. `[2, 3, 4, 1]` is `(1234)`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        if degree > u8::MAX as usize {
            return Err(Error::Parse(format!("degree {degree} too large")));
        }
        let mut seen = vec![false; degree];
        let mut out = Vec::with_capacity(degree);
        for &im in images {
            if im == 0 || im > degree {
                return Err(Error::Degree { degree, image: im });
            }
            if std::mem::replace(&mut seen[im - 1], true) {
                return Err(Error::NotBijection(format!("{images:?} repeats {im}")));
            }
            out.push((im - 1) as u8);
        }
        Ok(Permutation { images: out })
    }

    /// Parse cycle notation such as `(12)(34)`, `(3412)` or `(1,10)(2,3)`.
    /// `I`, `e` and `()` denote the identity.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Self> {
        let s = s.trim();
        let mut images: Vec<u8> = (0..degree as u8).collect();
        if s == "I" || s == "e" || s == "()" {
            return Ok(Permutation { images });
        }
        let mut moved = vec![false; degree];
        let mut rest = s;
        if rest.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        while !rest.is_empty() {
            let body_end = rest
                .find(')')
                .filter(|_| rest.starts_with('('))
                .ok_or_else(|| Error::Parse(format!("malformed cycle notation {s:?}")))?;
            let body = &rest[1..body_end];
            rest = rest[body_end + 1..].trim_start();
            let points: Vec<usize> = if body.contains(',') || body.contains(' ') {
                body.split([',', ' '])
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad point {t:?} in {s:?}")))
                    })
                    .collect::<Result<_>>()?
            } else {
                body.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::Parse(format!("bad point {c:?} in {s:?}")))
                    })
                    .collect::<Result<_>>()?
            };
            for &p in &points {
                if p == 0 || p > degree {
                    return Err(Error::Degree { degree, image: p });
                }
                if std::mem::replace(&mut moved[p - 1], true) {
                    return Err(Error::NotBijection(format!("point {p} repeated in {s:?}")));
                }
            }
            for (k, &p) in points.iter().enumerate() {
                let next = points[(k + 1) % points.len()];
                images[p - 1] = (next - 1) as u8;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y as usize] = x as u8;
        }
        Permutation { images }
    }

    /// Number of moved points.
    pub fn support(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(x, &y)| *x != y as usize)
            .count()
    }

    /// Disjoint cycles, each starting at its smallest point, ordered by that
    /// point; fixed points omitted. Points are 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut done = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if done[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !done[x] {
                done[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Normalised cycle label, `I` for the identity. Degrees above 9 use
    /// comma-separated points.
    pub fn cycle_label(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "I".into();
        }
        let sep = if self.degree() > 9 { "," } else { "" };
        cycles
            .iter()
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
                format!("({})", pts.join(sep))
            })
            .collect()
    }

    /// 1-based one-line form.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_label())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.cycle_label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rotations_normalise() {
        assert_eq!(Permutation::parse_cycles("(3412)", 4).unwrap().cycle_label(), "(1234)");
        assert_eq!(Permutation::parse_cycles("(2143)", 4).unwrap().cycle_label(), "(1432)");
        assert_eq!(Permutation::parse_cycles("(4231)", 4).unwrap().cycle_label(), "(1423)");
        assert_eq!(Permutation::parse_cycles("(34)(12)", 4).unwrap().cycle_label(), "(12)(34)");
        assert_eq!(Permutation::parse_cycles("I", 4).unwrap().cycle_label(), "I");
    }

    #[test]
    fn one_line_round_trip() {
        let p = Permutation::from_one_line(&[2, 3, 4, 1]).unwrap();
        assert_eq!(p.cycle_label(), "(1234)");
        assert_eq!(p.one_line(), vec![2, 3, 4, 1]);
    }

    #[test]
    fn bad_input() {
        assert!(matches!(
            Permutation::from_one_line(&[1, 5, 2, 3]),
            Err(Error::Degree { .. })
        ));
        assert!(matches!(
            Permutation::from_one_line(&[1, 1]),
            Err(Error::NotBijection(_))
        ));
        assert!(Permutation::parse_cycles("(12", 4).is_err());
        assert!(Permutation::parse_cycles("(15)", 4).is_err());
        assert!(Permutation::parse_cycles("(121)", 4).is_err());
    }

    #[test]
    fn large_degree_labels_use_commas() {
        let p = Permutation::parse_cycles("(1,10)(2,3)", 10).unwrap();
        assert_eq!(p.cycle_label(), "(1,10)(2,3)");
    }

    fn perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_one_line(&v).unwrap())
    }

    proptest! {
        #[test]
        fn label_parses_back(p in perm(7)) {
            prop_assert_eq!(Permutation::parse_cycles(&p.cycle_label(), 7).unwrap(), p);
        }

        #[test]
        fn compose_with_inverse_is_identity(p in perm(6), q in perm(6)) {
            prop_assert_eq!(p.compose(&p.inverse()), Permutation::identity(6));
            prop_assert_eq!(p.compose(&q).inverse(), q.inverse().compose(&p.inverse()));
        }
    }
}
