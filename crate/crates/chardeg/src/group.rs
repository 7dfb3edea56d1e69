//! Finite permutation groups with full element enumeration.
//!
//! Elements are enumerated by breadth-first closure from the generators and
//! then re-sorted by image tuple, so element indices are canonical: the same
//! group built twice yields identical indexing. The identity always gets
//! index 0 because its image tuple `(0, 1, ..., n-1)` is lexicographically
//! least among all permutations of that degree.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::groupspec::GroupSpec;
use crate::perm::Permutation;

/// Size limits for element enumeration and class counting.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub max_order: usize,
    pub max_classes: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_order: 10_000,
            max_classes: 300,
        }
    }
}

impl Caps {
    pub fn with_max_order(max_order: usize) -> Self {
        Caps {
            max_order,
            ..Caps::default()
        }
    }
}

/// A finite group given by permutation generators, with all elements
/// enumerated and canonically indexed.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
    caps: Caps,
}

impl PermutationGroup {
    /// Enumerate the closure of `generators` under composition.
    pub fn from_generators(
        degree: usize,
        generators: Vec<Permutation>,
        caps: Caps,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameter("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidParameter(format!(
                    "generator degree {} does not match group degree {}",
                    g.degree(),
                    degree
                )));
            }
        }

        let identity = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        let mut discovered = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(identity.clone(), ());
        discovered.push(identity);
        queue.push_back(0usize);
        while let Some(at) = queue.pop_front() {
            let current = discovered[at].clone();
            for g in &generators {
                let next = current.compose(g);
                if !seen.contains_key(&next) {
                    if discovered.len() >= caps.max_order {
                        return Err(Error::OrderCapExceeded { cap: caps.max_order });
                    }
                    seen.insert(next.clone(), ());
                    discovered.push(next);
                    queue.push_back(discovered.len() - 1);
                }
            }
        }

        let mut elements = discovered;
        elements.sort();
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        Ok(PermutationGroup {
            degree,
            generators,
            elements,
            index,
            inverses,
            caps,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.index[g]).collect()
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Index 0 is always the identity.
    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        let product = self.elements[a].compose(&self.elements[b]);
        self.index[&product]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g x g^-1` by element index.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        let gi = self.inverses[g];
        self.multiply(self.multiply(g, x), gi)
    }

    fn commutator(&self, x: usize, y: usize) -> usize {
        let xi = self.inverses[x];
        let yi = self.inverses[y];
        self.multiply(self.multiply(self.multiply(xi, yi), x), y)
    }

    /// Smallest subset containing `seeds` and the identity, closed under
    /// product and inverse.
    pub fn subgroup_closure(&self, seeds: &BTreeSet<usize>) -> BTreeSet<usize> {
        let seed_list: Vec<usize> = seeds.iter().copied().collect();
        let mut closure = BTreeSet::new();
        closure.insert(self.identity_index());
        let mut queue: VecDeque<usize> = VecDeque::new();
        queue.push_back(self.identity_index());
        while let Some(x) = queue.pop_front() {
            for &s in &seed_list {
                let next = self.multiply(x, s);
                if closure.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        closure
    }

    /// Greedy small generating set for a subgroup given as an element set.
    /// Each added generator at least doubles the generated subgroup, so the
    /// result has at most log2(|subset|) members.
    pub fn small_generating_set(&self, subset: &BTreeSet<usize>) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut generated = BTreeSet::new();
        generated.insert(self.identity_index());
        for &x in subset {
            if !generated.contains(&x) {
                gens.push(x);
                generated = self.subgroup_closure(&gens.iter().copied().collect());
            }
        }
        gens
    }

    fn is_subgroup(&self, subset: &BTreeSet<usize>) -> bool {
        if !subset.contains(&self.identity_index()) {
            return false;
        }
        let gens = self.small_generating_set(subset);
        self.subgroup_closure(&gens.iter().copied().collect()) == *subset
    }

    /// Derived subgroup of a subgroup given as a closed element set.
    ///
    /// Small subsets take all commutator pairs. Larger ones (which, per the
    /// callers' contract, are normal in the whole group) take commutators of
    /// a generating set and then close under products and conjugation by the
    /// group's generators, which yields the same normal closure.
    fn commutator_subgroup(&self, subset: &BTreeSet<usize>) -> BTreeSet<usize> {
        const ALL_PAIRS_LIMIT: usize = 2000;
        if subset.len() <= ALL_PAIRS_LIMIT {
            let members: Vec<usize> = subset.iter().copied().collect();
            let mut seeds = BTreeSet::new();
            for &x in &members {
                for &y in &members {
                    seeds.insert(self.commutator(x, y));
                }
            }
            self.subgroup_closure(&seeds)
        } else {
            let gens = if subset.len() == self.elements.len() {
                self.generator_indices()
            } else {
                self.small_generating_set(subset)
            };
            let mut seeds = BTreeSet::new();
            for &x in &gens {
                for &y in &gens {
                    seeds.insert(self.commutator(x, y));
                }
            }
            let group_gens = self.generator_indices();
            let mut closure = self.subgroup_closure(&seeds);
            loop {
                let mut extra = BTreeSet::new();
                for &x in &closure {
                    for &g in &group_gens {
                        let conj = self.conjugate(g, x);
                        if !closure.contains(&conj) {
                            extra.insert(conj);
                        }
                    }
                }
                if extra.is_empty() {
                    break;
                }
                let mut seeds: BTreeSet<usize> = closure.iter().copied().collect();
                seeds.extend(extra);
                closure = self.subgroup_closure(&seeds);
            }
            closure
        }
    }

    /// Derived series of a closed subset: `H, H', H'', ...` until it
    /// stabilizes. Solvable iff the terminal term is trivial.
    pub fn derived_series(&self, subset: &BTreeSet<usize>) -> Result<(Vec<BTreeSet<usize>>, bool)> {
        if !self.is_subgroup(subset) {
            return Err(Error::Precondition(
                "derived_series input is not closed under product".into(),
            ));
        }
        let mut series = vec![subset.clone()];
        loop {
            let current = series.last().unwrap();
            if current.len() == 1 {
                break;
            }
            let next = self.commutator_subgroup(current);
            let stabilized = &next == current;
            series.push(next);
            if stabilized {
                break;
            }
        }
        let solvable = series.last().unwrap().len() == 1;
        Ok((series, solvable))
    }

    pub fn is_solvable(&self) -> bool {
        let whole: BTreeSet<usize> = (0..self.elements.len()).collect();
        self.derived_series(&whole)
            .expect("whole group is closed")
            .1
    }
}

// ---------------------------------------------------------------------------
// Named constructors
// ---------------------------------------------------------------------------

/// Arithmetic in F_q for prime powers q = p^k, elements encoded as
/// base-p digit strings packed into a single index in `0..q`.
/// Prime-power fields are F_p[x]/(f) for the lexicographically least
/// irreducible monic f (non-leading coefficients compared from x^{k-1}
/// down to the constant term).
struct SmallField {
    p: u32,
    k: u32,
    q: u32,
    /// Non-leading coefficients of the modulus, constant term first.
    modulus: Vec<u32>,
}

impl SmallField {
    fn new(q: u32) -> Result<SmallField> {
        let (p, k) = prime_power_split(q).ok_or_else(|| {
            Error::InvalidParameter(format!("{q} is not a prime power in 2..=32"))
        })?;
        let modulus = if k == 1 {
            vec![0]
        } else {
            least_irreducible_monic(p, k)
        };
        Ok(SmallField { p, k, q, modulus })
    }

    fn digits(&self, x: u32) -> Vec<u32> {
        let mut digits = vec![0u32; self.k as usize];
        let mut rest = x;
        for d in digits.iter_mut() {
            *d = rest % self.p;
            rest /= self.p;
        }
        digits
    }

    fn pack(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let da = self.digits(a);
        let db = self.digits(b);
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.pack(&sum)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return (a as u64 * b as u64 % self.p as u64) as u32;
        }
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u32; 2 * self.k as usize - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // Reduce modulo the monic modulus: x^k = -(modulus).
        for i in (self.k as usize..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &m) in self.modulus.iter().enumerate() {
                let idx = i - self.k as usize + j;
                prod[idx] = (prod[idx] + c * (self.p - m) % self.p) % self.p;
            }
        }
        self.pack(&prod[..self.k as usize])
    }

}

fn prime_power_split(q: u32) -> Option<(u32, u32)> {
    if !(2..=32).contains(&q) {
        return None;
    }
    for p in 2..=q {
        if q % p == 0 {
            let mut k = 0;
            let mut rest = q;
            while rest % p == 0 {
                rest /= p;
                k += 1;
            }
            return (rest == 1).then_some((p, k));
        }
    }
    None
}

/// Lexicographically least irreducible monic polynomial of degree k over F_p,
/// comparing non-leading coefficient tuples from x^{k-1} down. Returned with
/// the constant term first.
fn least_irreducible_monic(p: u32, k: u32) -> Vec<u32> {
    let k = k as usize;
    let total = (p as u64).pow(k as u32);
    for code in 0..total {
        // code encodes (c_{k-1}, ..., c_0) in lex order, c_{k-1} most significant.
        let mut coeffs = vec![0u32; k];
        let mut rest = code;
        for i in 0..k {
            coeffs[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        // coeffs is constant-term-first already: the least significant base-p
        // digit of `code` varies fastest, and we want c_0 to vary fastest.
        if is_irreducible_monic(p, &coeffs) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

/// Test x^k + sum coeffs[i] x^i for irreducibility by trial division by all
/// monic polynomials of degree 1..=k/2.
fn is_irreducible_monic(p: u32, coeffs: &[u32]) -> bool {
    let k = coeffs.len();
    let mut poly: Vec<u32> = coeffs.to_vec();
    poly.push(1);
    for d in 1..=k / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut divisor = vec![0u32; d];
            let mut rest = code;
            for c in divisor.iter_mut() {
                *c = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            divisor.push(1);
            if poly_divides(p, &divisor, &poly) {
                return false;
            }
        }
    }
    true
}

fn poly_divides(p: u32, divisor: &[u32], poly: &[u32]) -> bool {
    let mut rem: Vec<u32> = poly.to_vec();
    let d = divisor.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let shift = rem.len() - 1 - d;
            for (i, &c) in divisor.iter().enumerate() {
                rem[shift + i] = (rem[shift + i] + lead * (p - c) % p) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

fn cyclic_generators(n: u32) -> (usize, Vec<Permutation>) {
    let degree = n as usize;
    if n == 1 {
        return (1, vec![]);
    }
    let cycle: Vec<u16> = (0..n as u16).collect();
    (degree, vec![Permutation::from_cycles(degree, &[cycle]).unwrap()])
}

fn dihedral_generators(order: u32) -> Result<(usize, Vec<Permutation>)> {
    if order < 6 || order % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "dihedral parameter must be an even order >= 6, got {order}"
        )));
    }
    let n = (order / 2) as u16;
    let degree = n as usize;
    let rotation = Permutation::from_cycles(degree, &[(0..n).collect()]).unwrap();
    let reflection =
        Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
    Ok((degree, vec![rotation, reflection]))
}

/// Generalized quaternion group of the given order 4n, as its left regular
/// representation on the elements a^i b^j (i < 2n, j < 2).
fn quaternion_generators(order: u32) -> Result<(usize, Vec<Permutation>)> {
    if order < 8 || order % 4 != 0 {
        return Err(Error::InvalidParameter(format!(
            "quaternion parameter must be an order 4n >= 8, got {order}"
        )));
    }
    let two_n = (order / 2) as u16;
    let n = two_n / 2;
    let degree = order as usize;
    let point = |i: u16, j: u16| (i % two_n) + two_n * j;
    // Left multiplication by a: a * a^i b^j = a^{i+1} b^j.
    let mut a_images = vec![0u16; degree];
    // Left multiplication by b, using b a^i = a^{-i} b and b^2 = a^n:
    //   j = 0 -> a^{-i} b,   j = 1 -> a^{n-i}.
    let mut b_images = vec![0u16; degree];
    for i in 0..two_n {
        for j in 0..2u16 {
            let from = point(i, j) as usize;
            a_images[from] = point(i + 1, j);
            b_images[from] = if j == 0 {
                point(two_n - i, 1)
            } else {
                point(two_n - i + n, 0)
            };
        }
    }
    Ok((degree, vec![
        Permutation::from_images(a_images).unwrap(),
        Permutation::from_images(b_images).unwrap(),
    ]))
}

fn sym_generators(n: u32) -> Result<(usize, Vec<Permutation>)> {
    if n == 0 || n > 12 {
        return Err(Error::InvalidParameter(format!(
            "sym parameter must be in 1..=12, got {n}"
        )));
    }
    let degree = n as usize;
    if n == 1 {
        return Ok((1, vec![]));
    }
    let transposition = Permutation::from_cycles(degree, &[vec![0, 1]]).unwrap();
    if n == 2 {
        return Ok((degree, vec![transposition]));
    }
    let cycle = Permutation::from_cycles(degree, &[(0..n as u16).collect()]).unwrap();
    Ok((degree, vec![transposition, cycle]))
}

fn alt_generators(n: u32) -> Result<(usize, Vec<Permutation>)> {
    if n == 0 || n > 12 {
        return Err(Error::InvalidParameter(format!(
            "alt parameter must be in 1..=12, got {n}"
        )));
    }
    let degree = n as usize;
    if n <= 2 {
        return Ok((degree, vec![]));
    }
    let three_cycle = Permutation::from_cycles(degree, &[vec![0, 1, 2]]).unwrap();
    if n == 3 {
        return Ok((degree, vec![three_cycle]));
    }
    let long = if n % 2 == 1 {
        Permutation::from_cycles(degree, &[(0..n as u16).collect()]).unwrap()
    } else {
        Permutation::from_cycles(degree, &[(1..n as u16).collect()]).unwrap()
    };
    Ok((degree, vec![three_cycle, long]))
}

/// SL(2, q) acting on the q^2 - 1 nonzero column vectors of F_q^2.
/// Vector (x, y) gets point index x*q + y - 1.
fn sl2_generators(q: u32) -> Result<(usize, Vec<Permutation>)> {
    let field = SmallField::new(q)?;
    let degree = (q * q - 1) as usize;
    let alpha_powers: Vec<u32> = (0..field.k)
        .map(|i| {
            let mut digits = vec![0u32; field.k as usize];
            digits[i as usize] = 1;
            field.pack(&digits)
        })
        .collect();
    let mut gens = Vec::new();
    for &lambda in &alpha_powers {
        gens.push(matrix_action_on_vectors(&field, [1, lambda, 0, 1], degree));
        gens.push(matrix_action_on_vectors(&field, [1, 0, lambda, 1], degree));
    }
    Ok((degree, gens))
}

fn matrix_action_on_vectors(field: &SmallField, m: [u32; 4], degree: usize) -> Permutation {
    let q = field.q;
    let mut images = vec![0u16; degree];
    for x in 0..q {
        for y in 0..q {
            if x == 0 && y == 0 {
                continue;
            }
            let nx = field.add(field.mul(m[0], x), field.mul(m[1], y));
            let ny = field.add(field.mul(m[2], x), field.mul(m[3], y));
            images[(x * q + y - 1) as usize] = (nx * q + ny - 1) as u16;
        }
    }
    Permutation::from_images(images).expect("matrix action is a bijection")
}

/// PSL(2, q) acting on the q + 1 projective points: [x : 1] has index x,
/// and [1 : 0] has index q.
fn psl2_generators(q: u32) -> Result<(usize, Vec<Permutation>)> {
    let field = SmallField::new(q)?;
    let degree = (q + 1) as usize;
    let alpha_powers: Vec<u32> = (0..field.k)
        .map(|i| {
            let mut digits = vec![0u32; field.k as usize];
            digits[i as usize] = 1;
            field.pack(&digits)
        })
        .collect();
    let mut gens = Vec::new();
    for &lambda in &alpha_powers {
        gens.push(matrix_action_on_line(&field, [1, lambda, 0, 1], degree));
        gens.push(matrix_action_on_line(&field, [1, 0, lambda, 1], degree));
    }
    Ok((degree, gens))
}

fn matrix_action_on_line(field: &SmallField, m: [u32; 4], degree: usize) -> Permutation {
    let q = field.q;
    let mut images = vec![0u16; degree];
    let apply = |x: u32, y: u32| -> u16 {
        let nx = field.add(field.mul(m[0], x), field.mul(m[1], y));
        let ny = field.add(field.mul(m[2], x), field.mul(m[3], y));
        if ny == 0 {
            q as u16
        } else {
            // Normalize [nx : ny] to [nx/ny : 1] by scanning for the quotient.
            let mut quotient = 0;
            for c in 0..q {
                if field.mul(c, ny) == nx {
                    quotient = c;
                    break;
                }
            }
            quotient as u16
        }
    };
    for x in 0..q {
        images[x as usize] = apply(x, 1);
    }
    images[q as usize] = apply(1, 0);
    Permutation::from_images(images).expect("projective action is a bijection")
}

/// Build the group described by a spec, subject to the caps.
pub fn construct_named_group(spec: &GroupSpec, caps: Caps) -> Result<PermutationGroup> {
    match spec {
        GroupSpec::Cyclic(n) => {
            if *n == 0 {
                return Err(Error::InvalidParameter("cyclic parameter must be >= 1".into()));
            }
            let (degree, gens) = cyclic_generators(*n);
            PermutationGroup::from_generators(degree, gens, caps)
        }
        GroupSpec::Dihedral(order) => {
            let (degree, gens) = dihedral_generators(*order)?;
            PermutationGroup::from_generators(degree, gens, caps)
        }
        GroupSpec::Quaternion(order) => {
            let (degree, gens) = quaternion_generators(*order)?;
            PermutationGroup::from_generators(degree, gens, caps)
        }
        GroupSpec::Sym(n) => {
            let (degree, gens) = sym_generators(*n)?;
            PermutationGroup::from_generators(degree, gens, caps)
        }
        GroupSpec::Alt(n) => {
            let (degree, gens) = alt_generators(*n)?;
            PermutationGroup::from_generators(degree, gens, caps)
        }
        GroupSpec::SL2(q) => {
            let (degree, gens) = sl2_generators(*q)?;
            PermutationGroup::from_generators(degree, gens, caps)
        }
        GroupSpec::PSL2(q) => {
            let (degree, gens) = psl2_generators(*q)?;
            PermutationGroup::from_generators(degree, gens, caps)
        }
        GroupSpec::Perm(gen_cycles) => {
            let points: Vec<u32> = gen_cycles
                .iter()
                .flat_map(|g| g.iter())
                .flat_map(|c| c.iter())
                .copied()
                .collect();
            if points.iter().any(|&p| p == 0) {
                return Err(Error::InvalidParameter("cycle points are 1-based".into()));
            }
            let degree = points.iter().copied().max().unwrap_or(1) as usize;
            let mut gens = Vec::new();
            for cycles in gen_cycles {
                let zero_based: Vec<Vec<u16>> = cycles
                    .iter()
                    .map(|c| c.iter().map(|&p| (p - 1) as u16).collect())
                    .collect();
                gens.push(Permutation::from_cycles(degree, &zero_based)?);
            }
            PermutationGroup::from_generators(degree, gens, caps)
        }
        GroupSpec::Product(a, b) => {
            let left = construct_named_group(a, caps)?;
            let right = construct_named_group(b, caps)?;
            direct_product(&left, &right, caps)
        }
    }
}

/// Direct product acting on the disjoint union of the factors' points.
pub fn direct_product(
    a: &PermutationGroup,
    b: &PermutationGroup,
    caps: Caps,
) -> Result<PermutationGroup> {
    let degree = a.degree() + b.degree();
    let mut gens = Vec::new();
    for g in a.generators() {
        let mut images: Vec<u16> = g.images().to_vec();
        images.extend((a.degree()..degree).map(|i| i as u16));
        gens.push(Permutation::from_images(images).unwrap());
    }
    for g in b.generators() {
        let mut images: Vec<u16> = (0..a.degree() as u16).collect();
        images.extend(g.images().iter().map(|&i| i + a.degree() as u16));
        gens.push(Permutation::from_images(images).unwrap());
    }
    PermutationGroup::from_generators(degree, gens, caps)
}
