//! Textual group specifications.
//!
//! Grammar:
//!
//! ```text
//! spec   := family | "perm:" cycles | "product:" spec "," spec
//! family := ("alt" | "sym" | "cyclic" | "dihedral" | "quaternion") ":" int
//!         | ("sl2" | "psl2") ":" prime_power
//! cycles := whitespace-separated parenthesized cycles of 1-based points
//! ```
//!
//! In `perm:` specs, whitespace separates generators; cycles written
//! back-to-back (no whitespace) multiply into a single generator, applied
//! left to right. `render(parse(s))` parses back to an equal spec.

use std::fmt;

use crate::error::{Error, Result};

/// A parsed group constructor request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    /// Cyclic group of order n.
    Cyclic(u32),
    /// Dihedral group; the parameter is the group order 2n.
    Dihedral(u32),
    /// Generalized quaternion group; the parameter is the group order 4n.
    Quaternion(u32),
    Sym(u32),
    Alt(u32),
    /// SL(2, q) acting on the q^2 - 1 nonzero vectors of F_q^2.
    SL2(u32),
    /// PSL(2, q) acting on the q + 1 points of the projective line.
    PSL2(u32),
    /// Explicit generators; each generator is a list of 1-based cycles.
    Perm(Vec<Vec<Vec<u32>>>),
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Quaternion(n) => write!(f, "quaternion:{n}"),
            GroupSpec::Sym(n) => write!(f, "sym:{n}"),
            GroupSpec::Alt(n) => write!(f, "alt:{n}"),
            GroupSpec::SL2(q) => write!(f, "sl2:{q}"),
            GroupSpec::PSL2(q) => write!(f, "psl2:{q}"),
            GroupSpec::Perm(gens) => {
                write!(f, "perm:")?;
                for (i, gen) in gens.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    for cycle in gen {
                        let pts: Vec<String> = cycle.iter().map(|p| p.to_string()).collect();
                        write!(f, "({})", pts.join(" "))?;
                    }
                }
                Ok(())
            }
            GroupSpec::Product(a, b) => write!(f, "product:{a},{b}"),
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn error(&self, expected: &str) -> Error {
        Error::Parse {
            position: self.pos,
            expected: expected.to_string(),
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn parse_int(&mut self) -> Result<u32> {
        let digits: String = self.rest().chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return Err(self.error("integer"));
        }
        self.pos += digits.len();
        digits
            .parse::<u32>()
            .map_err(|_| self.error("integer in range"))
    }

    fn parse_spec(&mut self) -> Result<GroupSpec> {
        const FAMILIES: &[(&str, fn(u32) -> GroupSpec)] = &[
            ("alt:", GroupSpec::Alt as fn(u32) -> GroupSpec),
            ("sym:", GroupSpec::Sym),
            ("cyclic:", GroupSpec::Cyclic),
            ("dihedral:", GroupSpec::Dihedral),
            ("quaternion:", GroupSpec::Quaternion),
            ("sl2:", GroupSpec::SL2),
            ("psl2:", GroupSpec::PSL2),
        ];
        if self.eat("product:") {
            let first = self.parse_spec()?;
            if !self.eat(",") {
                return Err(self.error("','"));
            }
            let second = self.parse_spec()?;
            return Ok(GroupSpec::Product(Box::new(first), Box::new(second)));
        }
        if self.eat("perm:") {
            return self.parse_generators();
        }
        for (prefix, build) in FAMILIES {
            if self.eat(prefix) {
                return Ok(build(self.parse_int()?));
            }
        }
        Err(self.error("one of alt:, sym:, cyclic:, dihedral:, quaternion:, sl2:, psl2:, perm:, product:"))
    }

    fn parse_generators(&mut self) -> Result<GroupSpec> {
        let mut generators = Vec::new();
        loop {
            while self.rest().starts_with(char::is_whitespace) {
                self.pos += 1;
            }
            if !self.rest().starts_with('(') {
                break;
            }
            // Adjacent cycles (no whitespace between them) form one generator.
            let mut cycles = Vec::new();
            while self.eat("(") {
                cycles.push(self.parse_cycle_body()?);
            }
            generators.push(cycles);
        }
        if generators.is_empty() {
            return Err(self.error("'(' starting a cycle"));
        }
        Ok(GroupSpec::Perm(generators))
    }

    fn parse_cycle_body(&mut self) -> Result<Vec<u32>> {
        let mut points = Vec::new();
        loop {
            while self.rest().starts_with(char::is_whitespace) {
                self.pos += 1;
            }
            if self.eat(")") {
                return Ok(points);
            }
            let point = self.parse_int()?;
            if point == 0 {
                return Err(self.error("1-based point"));
            }
            points.push(point);
        }
    }
}

/// Parse a group spec; errors carry the byte position and expected token.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let mut parser = Parser {
        text: text.trim(),
        pos: 0,
    };
    let spec = parser.parse_spec()?;
    while parser.rest().starts_with(char::is_whitespace) {
        parser.pos += 1;
    }
    if !parser.rest().is_empty() {
        return Err(parser.error("end of input"));
    }
    Ok(spec)
}


#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn arb_spec() -> impl Strategy<Value = GroupSpec> {
        let leaf = prop_oneof![
            (1u32..=12).prop_map(GroupSpec::Cyclic),
            (3u32..=8).prop_map(|n| GroupSpec::Dihedral(2 * n)),
            (2u32..=6).prop_map(|n| GroupSpec::Quaternion(4 * n)),
            (1u32..=7).prop_map(GroupSpec::Sym),
            (1u32..=7).prop_map(GroupSpec::Alt),
            proptest::sample::select(vec![2u32, 3, 4, 5, 7, 8, 9]).prop_map(GroupSpec::SL2),
            proptest::sample::select(vec![2u32, 3, 4, 5, 7, 8, 9, 11]).prop_map(GroupSpec::PSL2),
            proptest::collection::vec(
                proptest::collection::vec(
                    proptest::collection::vec(1u32..=9, 2..4),
                    1..3
                ),
                1..3
            )
            .prop_filter_map("cycles must not repeat points within a cycle", |gens| {
                let ok = gens.iter().all(|g| {
                    g.iter().all(|cycle| {
                        let mut sorted = cycle.clone();
                        sorted.sort_unstable();
                        sorted.dedup();
                        sorted.len() == cycle.len()
                    })
                });
                ok.then(|| GroupSpec::Perm(gens))
            }),
        ];
        leaf.prop_recursive(2, 8, 2, |inner| {
            (inner.clone(), inner)
                .prop_map(|(a, b)| GroupSpec::Product(Box::new(a), Box::new(b)))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn render_parse_round_trip(spec in arb_spec()) {
            let rendered = spec.to_string();
            let reparsed = parse_group_spec(&rendered).unwrap();
            prop_assert_eq!(reparsed, spec);
        }
    }
}
