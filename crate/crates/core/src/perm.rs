//! Finite permutation groups by full enumeration.
//!
//! Points are 0-indexed internally and 1-indexed in cycle notation on input
//! and output. Products compose right to left: `(a * b)(x) = a(b(x))`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde_json::{json, Value};

use crate::{Error, Result};

pub const DEFAULT_ORDER_CAP: usize = 5000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self { images: (0..degree as u32).collect() }
    }

    /// From a 0-indexed image array.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Self { images: images.into_iter().map(|x| x as u32).collect() })
    }

    /// From disjoint cycles written with 1-indexed points.
    pub fn from_cycles<C: AsRef<[usize]>>(degree: usize, cycles: &[C]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for c in cycles {
            let c = c.as_ref();
            for (k, &p) in c.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(Error::InvalidPermutation(format!("point {p} outside 1..={degree}")));
                }
                if touched[p - 1] {
                    return Err(Error::InvalidPermutation(format!("cycles not disjoint at {p}")));
                }
                touched[p - 1] = true;
                images[p - 1] = c[(k + 1) % c.len()] - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Self { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Extends to a larger degree by fixing the new points.
    pub fn padded(&self, degree: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(self.images.len() as u32..degree as u32);
        Self { images }
    }

    /// Disjoint cycles of length > 1, 1-indexed, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cyc.push(p + 1);
                p = self.apply(p);
            }
            out.push(cyc);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| num_integer::lcm(acc, c.len()))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

impl std::ops::Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

/// Group generated by permutations, with its full element list.
///
/// Element 0 is always the identity.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl PermGroup {
    pub fn enumerate(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::enumerate_with_cap(degree, generators, DEFAULT_ORDER_CAP)
    }

    /// Breadth-first closure under right multiplication by the generators.
    pub fn enumerate_with_cap(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator {g:?} has degree {} not {degree}",
                    g.degree()
                )));
            }
        }
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &generators {
                let y = elements[i].compose(g);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    index.insert(y.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }
        Ok(Self { degree, generators, elements, index })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::enumerate(degree, Vec::new()).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.index[&self.elements[i].compose(&self.elements[j])]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.index[&self.elements[i].inverse()]
    }

    pub fn exponent(&self) -> usize {
        self.elements.iter().fold(1, |acc, x| num_integer::lcm(acc, x.order()))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|a| self.generators.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        self.degree == g.degree && self.elements.iter().all(|x| g.contains(x))
    }

    /// Subgroup generated by the given elements, with a small generating set
    /// chosen greedily in element order.
    pub fn subgroup_from_elements(&self, members: &[usize]) -> Result<PermGroup> {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = PermGroup::trivial(self.degree);
        for &m in members {
            let x = &self.elements[m];
            if !current.contains(x) {
                gens.push(x.clone());
                current = PermGroup::enumerate(self.degree, gens.clone())?;
            }
        }
        Ok(current)
    }

    pub fn to_json(&self) -> Value {
        let gens: Vec<Value> = self.generators.iter().map(|g| json!(g.cycles())).collect();
        json!({ "degree": self.degree, "generators": gens })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        Self::from_json_with_cap(v, DEFAULT_ORDER_CAP)
    }

    pub fn from_json_with_cap(v: &Value, cap: usize) -> Result<Self> {
        let degree = v
            .get("degree")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("group field `degree` missing".into()))? as usize;
        let gens = v.get("generators").ok_or_else(|| Error::Parse("group field `generators` missing".into()))?;
        PermGroup::enumerate_with_cap(degree, parse_generator_list(gens, degree)?, cap)
    }
}

/// Parses generators given as a list of cycle lists (`[[[1,2],[3,4]], ...]`)
/// or, in the short form, a list of single cycles (`[[1,2],[1,2,3]]`).
pub fn parse_generator_list(v: &Value, degree: usize) -> Result<Vec<Permutation>> {
    let bad = || Error::Parse(format!("bad generator list {v}"));
    let list = v.as_array().ok_or_else(bad)?;
    let mut out = Vec::with_capacity(list.len());
    for g in list {
        let parts = g.as_array().ok_or_else(bad)?;
        let nested = parts.iter().any(Value::is_array);
        let cycles: Vec<Vec<usize>> = if nested {
            parts
                .iter()
                .map(|c| {
                    c.as_array()
                        .ok_or_else(bad)?
                        .iter()
                        .map(|p| p.as_u64().map(|p| p as usize).ok_or_else(bad))
                        .collect()
                })
                .collect::<Result<_>>()?
        } else {
            vec![parts.iter().map(|p| p.as_u64().map(|p| p as usize).ok_or_else(bad)).collect::<Result<_>>()?]
        };
        out.push(Permutation::from_cycles(degree, &cycles)?);
    }
    Ok(out)
}

/// Conjugacy class data. Classes are ordered by size, then by representative;
/// the representative of a class is its lexicographically smallest element.
#[derive(Clone, Debug)]
pub struct ConjClassData {
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    pub class_of: Vec<usize>,
    pub centralizer_generators: Vec<Vec<Permutation>>,
}

impl ConjClassData {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn centralizer_order(&self, group_order: usize, class: usize) -> usize {
        group_order / self.sizes[class]
    }
}

pub fn conjugacy_classes(g: &PermGroup) -> ConjClassData {
    let n = g.order();
    let gen_pairs: Vec<(Permutation, Permutation)> = g.generators.iter().map(|s| (s.clone(), s.inverse())).collect();
    let mut raw_class = vec![usize::MAX; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if raw_class[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut orbit = vec![start];
        raw_class[start] = id;
        let mut k = 0;
        while k < orbit.len() {
            let x = &g.elements[orbit[k]];
            for (s, si) in &gen_pairs {
                let y = s.compose(x).compose(si);
                let j = g.index[&y];
                if raw_class[j] == usize::MAX {
                    raw_class[j] = id;
                    orbit.push(j);
                }
            }
            k += 1;
        }
        orbits.push(orbit);
    }
    let mut keyed: Vec<(usize, Permutation, Vec<usize>)> = orbits
        .into_iter()
        .map(|o| {
            let rep = o.iter().map(|&i| g.elements[i].clone()).min().expect("nonempty orbit");
            (o.len(), rep, o)
        })
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));

    let mut class_of = vec![0; n];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    let mut centralizer_generators = Vec::new();
    for (c, (size, rep, members)) in keyed.into_iter().enumerate() {
        for m in members {
            class_of[m] = c;
        }
        let rep_idx = g.index[&rep];
        let cent: Vec<usize> = (0..n).filter(|&y| g.elements[y].compose(&rep) == rep.compose(&g.elements[y])).collect();
        debug_assert_eq!(cent.len() * size, n);
        let gens = g.subgroup_from_elements(&cent).map(|h| h.generators).unwrap_or_default();
        reps.push(rep_idx);
        sizes.push(size);
        centralizer_generators.push(gens);
    }
    ConjClassData { reps, sizes, class_of, centralizer_generators }
}

fn check_subgroup(h: &PermGroup, g: &PermGroup) -> Result<()> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotASubgroup(format!(
            "group of order {} (degree {}) is not contained in group of order {} (degree {})",
            h.order(),
            h.degree,
            g.order(),
            g.degree
        )));
    }
    Ok(())
}

/// True iff conjugation by `g` preserves `h`.
pub fn is_normal(h: &PermGroup, g: &PermGroup) -> Result<bool> {
    check_subgroup(h, g)?;
    for s in &g.generators {
        let si = s.inverse();
        for x in &h.elements {
            if !h.contains(&s.compose(x).compose(&si)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Normality tested as "H is a union of conjugacy classes of G".
pub fn is_union_of_classes(h: &PermGroup, g: &PermGroup, classes: &ConjClassData) -> Result<bool> {
    check_subgroup(h, g)?;
    let hit: HashSet<usize> = h.elements.iter().map(|x| classes.class_of[g.index[x]]).collect();
    let total: usize = hit.iter().map(|&c| classes.sizes[c]).sum();
    Ok(total == h.order())
}

/// Left cosets `xH`. Representatives are the first coset members in the
/// element order of `g`.
#[derive(Clone, Debug)]
pub struct Cosets {
    pub reps: Vec<usize>,
    pub coset_of: Vec<usize>,
}

impl Cosets {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
}

pub fn left_cosets(h: &PermGroup, g: &PermGroup) -> Result<Cosets> {
    check_subgroup(h, g)?;
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for y in &h.elements {
            coset_of[g.index[&g.elements[x].compose(y)]] = c;
        }
    }
    Ok(Cosets { reps, coset_of })
}

pub fn centralizer(g: &PermGroup, x: &Permutation) -> Result<PermGroup> {
    if !g.contains(x) {
        return Err(Error::NotInGroup);
    }
    let members: Vec<usize> =
        (0..g.order()).filter(|&y| g.elements[y].compose(x) == x.compose(&g.elements[y])).collect();
    g.subgroup_from_elements(&members)
}

fn cycle(points: impl IntoIterator<Item = usize>) -> Vec<usize> {
    points.into_iter().collect()
}

fn quaternion_group() -> Result<PermGroup> {
    // units ±1, ±i, ±j, ±k as indices 0..8 = 2*basis + sign
    fn unit_mul(a: usize, b: usize) -> usize {
        const TABLE: [[(usize, bool); 4]; 4] = [
            [(0, false), (1, false), (2, false), (3, false)],
            [(1, false), (0, true), (3, false), (2, true)],
            [(2, false), (3, true), (0, true), (1, false)],
            [(3, false), (2, false), (1, true), (0, true)],
        ];
        let (ba, sa) = (a / 2, a % 2 == 1);
        let (bb, sb) = (b / 2, b % 2 == 1);
        let (bc, neg) = TABLE[ba][bb];
        2 * bc + usize::from(sa ^ sb ^ neg)
    }
    let left = |u: usize| Permutation::from_images((0..8).map(|x| unit_mul(u, x)).collect());
    PermGroup::enumerate(8, vec![left(2)?, left(4)?])
}

/// Resolves a built-in group name: `S<n>`, `A<n>`, `C<n>`, `D<n>`, `Q8`,
/// `V4`, `sym(n)`, `alt(n)`.
pub fn named_group(name: &str) -> Result<PermGroup> {
    named_group_with_cap(name, DEFAULT_ORDER_CAP)
}

pub fn named_group_with_cap(name: &str, cap: usize) -> Result<PermGroup> {
    let name = name.trim();
    let unknown = || Error::UnknownGroup(name.to_string());
    let lower = name.to_ascii_lowercase();
    let (kind, n) = if let Some(rest) = lower.strip_prefix("sym(").and_then(|r| r.strip_suffix(')')) {
        ('s', rest.trim().parse::<usize>().map_err(|_| unknown())?)
    } else if let Some(rest) = lower.strip_prefix("alt(").and_then(|r| r.strip_suffix(')')) {
        ('a', rest.trim().parse::<usize>().map_err(|_| unknown())?)
    } else if lower == "q8" {
        return quaternion_group();
    } else if lower == "v4" {
        let gens =
            vec![Permutation::from_cycles(4, &[[1, 2], [3, 4]])?, Permutation::from_cycles(4, &[[1, 3], [2, 4]])?];
        return PermGroup::enumerate_with_cap(4, gens, cap);
    } else {
        let mut chars = lower.chars();
        let k = chars.next().ok_or_else(unknown)?;
        (k, chars.as_str().parse::<usize>().map_err(|_| unknown())?)
    };
    if n == 0 {
        return Err(unknown());
    }
    let gens = match kind {
        's' => {
            if n < 2 {
                vec![]
            } else {
                vec![Permutation::from_cycles(n, &[[1, 2]])?, Permutation::from_cycles(n, &[cycle(1..=n)])?]
            }
        }
        'a' => (3..=n).map(|k| Permutation::from_cycles(n, &[[1, 2, k]])).collect::<Result<_>>()?,
        'c' => {
            if n < 2 {
                vec![]
            } else {
                vec![Permutation::from_cycles(n, &[cycle(1..=n)])?]
            }
        }
        'd' => {
            if n < 3 {
                return Err(unknown());
            }
            let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
            vec![Permutation::from_cycles(n, &[cycle(1..=n)])?, Permutation::from_images(refl)?]
        }
        _ => return Err(unknown()),
    };
    PermGroup::enumerate_with_cap(n, gens, cap)
}

/// Resolves a group given by name or as Group JSON text.
pub fn parse_group(spec: &str) -> Result<PermGroup> {
    parse_group_with_cap(spec, DEFAULT_ORDER_CAP)
}

pub fn parse_group_with_cap(spec: &str, cap: usize) -> Result<PermGroup> {
    let t = spec.trim();
    if t.starts_with('{') {
        PermGroup::from_json_with_cap(&serde_json::from_str(t)?, cap)
    } else {
        named_group_with_cap(t, cap)
    }
}

/// Resolves a subgroup of `ambient`: a built-in name (padded with fixed
/// points up to the ambient degree) or a JSON generator list in the
/// ambient degree.
pub fn parse_subgroup(spec: &str, ambient: &PermGroup) -> Result<PermGroup> {
    let t = spec.trim();
    let h = if t.starts_with('[') {
        let v: Value = serde_json::from_str(t)?;
        PermGroup::enumerate(ambient.degree(), parse_generator_list(&v, ambient.degree())?)?
    } else {
        let h = parse_group(t)?;
        if h.degree() > ambient.degree() {
            return Err(Error::NotASubgroup(format!("degree {} exceeds {}", h.degree(), ambient.degree())));
        }
        let gens = h.generators().iter().map(|p| p.padded(ambient.degree())).collect();
        PermGroup::enumerate(ambient.degree(), gens)?
    };
    check_subgroup(&h, ambient)?;
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> PermGroup {
        PermGroup::enumerate(
            3,
            vec![Permutation::from_cycles(3, &[[1, 2]]).unwrap(), Permutation::from_cycles(3, &[[1, 2, 3]]).unwrap()],
        )
        .unwrap()
    }

    fn sub(g: &PermGroup, cycles: &[&[usize]]) -> PermGroup {
        let gens = cycles.iter().map(|c| Permutation::from_cycles(g.degree(), &[*c]).unwrap()).collect();
        PermGroup::enumerate(g.degree(), gens).unwrap()
    }

    #[test]
    fn enumeration_orders() {
        assert_eq!(s3().order(), 6);
        assert_eq!(PermGroup::enumerate(1, vec![]).unwrap().order(), 1);
        let c5 = PermGroup::enumerate(5, vec![Permutation::from_cycles(5, &[[1, 2, 3, 4, 5]]).unwrap()]).unwrap();
        assert_eq!(c5.order(), 5);
        assert!(s3().element(0).is_identity());
    }

    #[test]
    fn cap_is_enforced() {
        let g = named_group("S5").unwrap();
        assert!(matches!(
            PermGroup::enumerate_with_cap(5, g.generators().to_vec(), 100),
            Err(Error::CapExceeded { cap: 100 })
        ));
    }

    #[test]
    fn class_equations() {
        let c = conjugacy_classes(&s3());
        assert_eq!(c.sizes, vec![1, 2, 3]);
        assert_eq!(conjugacy_classes(&PermGroup::trivial(3)).sizes, vec![1]);
        let c4 = named_group("C4").unwrap();
        assert_eq!(conjugacy_classes(&c4).sizes, vec![1, 1, 1, 1]);
        for name in ["S4", "A5", "D6", "Q8"] {
            let g = named_group(name).unwrap();
            let cl = conjugacy_classes(&g);
            assert_eq!(cl.sizes.iter().sum::<usize>(), g.order());
            for (k, &r) in cl.reps.iter().enumerate() {
                let cent = centralizer(&g, g.element(r)).unwrap();
                assert_eq!(cent.order() * cl.sizes[k], g.order(), "{name} class {k}");
            }
        }
    }

    #[test]
    fn normality_examples() {
        let g = s3();
        let a3 = sub(&g, &[&[1, 2, 3]]);
        let t = sub(&g, &[&[1, 2]]);
        assert!(is_normal(&a3, &g).unwrap());
        assert!(!is_normal(&t, &g).unwrap());
        assert!(is_normal(&g, &g).unwrap());
        let s4 = named_group("S4").unwrap();
        assert!(matches!(is_normal(&s4, &g), Err(Error::NotASubgroup(_))));
    }

    #[test]
    fn normality_agrees_with_class_unions() {
        let g = named_group("S4").unwrap();
        let cl = conjugacy_classes(&g);
        let candidates = [
            named_group("V4").unwrap(),
            parse_subgroup("A4", &g).unwrap(),
            parse_subgroup("S3", &g).unwrap(),
            parse_subgroup("[[1,2]]", &g).unwrap(),
            parse_subgroup("C4", &g).unwrap(),
            g.clone(),
            PermGroup::trivial(4),
        ];
        for h in &candidates {
            assert_eq!(is_normal(h, &g).unwrap(), is_union_of_classes(h, &g, &cl).unwrap());
        }
    }

    #[test]
    fn coset_counts() {
        let g = s3();
        let t = sub(&g, &[&[1, 2]]);
        assert_eq!(left_cosets(&t, &g).unwrap().len(), 3);
        assert_eq!(left_cosets(&g, &g).unwrap().len(), 1);
        let c4 = named_group("C4").unwrap();
        assert_eq!(left_cosets(&PermGroup::trivial(4), &c4).unwrap().len(), 4);
        let cs = left_cosets(&t, &g).unwrap();
        for c in 0..cs.len() {
            assert_eq!(cs.coset_of.iter().filter(|&&x| x == c).count(), t.order());
        }
    }

    #[test]
    fn centralizer_examples() {
        let g = s3();
        let t = Permutation::from_cycles(3, &[[1, 2]]).unwrap();
        let r = Permutation::from_cycles(3, &[[1, 2, 3]]).unwrap();
        assert_eq!(centralizer(&g, &t).unwrap().order(), 2);
        assert_eq!(centralizer(&g, &Permutation::identity(3)).unwrap().order(), 6);
        assert_eq!(centralizer(&g, &r).unwrap().order(), 3);
        let outside = Permutation::from_cycles(4, &[[1, 4]]).unwrap();
        let s4 = named_group("S4").unwrap();
        let s3_in_s4 = parse_subgroup("S3", &s4).unwrap();
        assert!(matches!(centralizer(&s3_in_s4, &outside), Err(Error::NotInGroup)));
    }

    #[test]
    fn builtin_orders() {
        let expect = [
            ("S3", 6),
            ("S4", 24),
            ("S5", 120),
            ("S6", 720),
            ("A4", 12),
            ("A5", 60),
            ("C2", 2),
            ("C12", 12),
            ("D4", 8),
            ("D8", 16),
            ("Q8", 8),
            ("V4", 4),
            ("sym(4)", 24),
            ("alt(5)", 60),
            ("C1", 1),
            ("S1", 1),
        ];
        for (name, order) in expect {
            assert_eq!(named_group(name).unwrap().order(), order, "{name}");
        }
        assert!(!named_group("Q8").unwrap().is_abelian());
        assert!(named_group("X9").is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = named_group("D5").unwrap();
        let back = PermGroup::from_json(&g.to_json()).unwrap();
        assert_eq!(back.order(), 10);
        let h = parse_group(r#"{"degree": 5, "generators": [[[1,2],[3,4,5]]]}"#).unwrap();
        assert_eq!(h.order(), 6);
    }

    #[test]
    fn cycles_are_one_indexed() {
        let p = Permutation::from_cycles(4, &[vec![2, 4, 3]]).unwrap();
        assert_eq!(p.cycles(), vec![vec![2, 4, 3]]);
        assert_eq!(p.apply(1), 3);
        assert_eq!(p.order(), 3);
        assert!(Permutation::from_cycles(3, &[[1, 4]]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![1, 2], vec![2, 3]]).is_err());
    }
}
