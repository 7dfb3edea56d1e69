//! Permutations on `{0, ..., degree-1}` in image-vector form.
//!
//! The group product is function composition acting on the left:
//! `(a * b)(x) = a(b(x))`.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation stored as its image vector: point `i` maps to `images[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Build from an image vector, checking that it is a bijection.
    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &img in &images {
            let idx = img as usize;
            if idx >= images.len() || seen[idx] {
                return Err(Error::InvalidParameter(
                    "image vector is not a bijection".into(),
                ));
            }
            seen[idx] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from cycles of 0-based points, applied left to right.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u16>]) -> Result<Self> {
        let mut perm = Permutation::identity(degree);
        for cycle in cycles {
            let mut seen = vec![false; degree];
            for &pt in cycle {
                if pt as usize >= degree {
                    return Err(Error::InvalidParameter(format!(
                        "cycle point {} exceeds degree {}",
                        pt + 1,
                        degree
                    )));
                }
                if seen[pt as usize] {
                    return Err(Error::InvalidParameter(format!(
                        "point {} repeated within a cycle",
                        pt + 1
                    )));
                }
                seen[pt as usize] = true;
            }
            let mut step = Permutation::identity(degree);
            for w in 0..cycle.len() {
                step.images[cycle[w] as usize] = cycle[(w + 1) % cycle.len()];
            }
            perm = step.compose(&perm);
        }
        Ok(perm)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn apply(&self, point: u16) -> u16 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i as u16 == img)
    }

    /// `self * other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&p| self.images[p as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u16;
        }
        Permutation { images }
    }

    /// Multiplicative order: lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut order = 1u64;
        for cycle in self.cycles_with_fixed(false) {
            order = num_integer::lcm(order, cycle.len() as u64);
        }
        order
    }

    /// Nontrivial cycles, each starting at its least point, sorted by least point.
    pub fn cycles(&self) -> Vec<Vec<u16>> {
        self.cycles_with_fixed(false)
    }

    fn cycles_with_fixed(&self, include_fixed: bool) -> Vec<Vec<u16>> {
        let mut seen = vec![false; self.images.len()];
        let mut cycles = Vec::new();
        for start in 0..self.images.len() as u16 {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut pt = self.apply(start);
            while pt != start {
                seen[pt as usize] = true;
                cycle.push(pt);
                pt = self.apply(pt);
            }
            if cycle.len() > 1 || include_fixed {
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// Disjoint-cycle notation with 1-based points; identity renders as `()`.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|&p| (p + 1).to_string()).collect();
                format!("({})", pts.join(" "))
            })
            .collect::<Vec<_>>()
            .join("")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_operand_first() {
        // a = (0 1), b = (1 2); (a*b)(1) = a(2) = 2, (a*b)(2) = a(1) = 0.
        let a = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let ab = a.compose(&b);
        assert_eq!(ab.images(), &[1, 2, 0]);
    }

    #[test]
    fn inverse_is_involution() {
        let p = Permutation::from_cycles(6, &[vec![0, 3, 4], vec![1, 5]]).unwrap();
        assert_eq!(p.inverse().inverse(), p);
        assert!(p.compose(&p.inverse()).is_identity());
    }

    #[test]
    fn order_is_lcm_of_cycle_lengths() {
        let p = Permutation::from_cycles(5, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(Permutation::identity(4).order(), 1);
    }

    #[test]
    fn cycle_string_round_trips_visually() {
        let p = Permutation::from_cycles(5, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.cycle_string(), "(1 2 3)(4 5)");
        assert_eq!(Permutation::identity(3).cycle_string(), "()");
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 2]).is_err());
        assert!(Permutation::from_images(vec![0, 3]).is_err());
    }
}
