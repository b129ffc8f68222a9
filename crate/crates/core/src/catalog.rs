//! Named group constructors and the group-definition file format.
//!
//! A definition file is a JSON object:
//!
//! ```json
//! {
//!   "name": "S3",
//!   "degree": 3,
//!   "generators": [[2, 1, 3], [2, 3, 1]],
//!   "expected": { "order": 6, "class_number": 3 }
//! }
//! ```
//!
//! Generators are 1-based image lists; `expected` is optional and, when
//! present, is checked on materialization. A catalog directory is a flat set
//! of such files, one group per file.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::classes::ClassPartition;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, DEFAULT_ORDER_CAP};
use crate::perm::Permutation;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class_number: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDefinition {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

impl GroupDefinition {
    pub fn new(name: impl Into<String>, degree: usize, generators: Vec<Vec<usize>>) -> Self {
        GroupDefinition {
            name: name.into(),
            degree,
            generators,
            expected: None,
        }
    }

    fn from_perms(name: impl Into<String>, degree: usize, gens: &[Permutation]) -> Self {
        Self::new(
            name,
            degree,
            gens.iter().map(Permutation::to_one_based).collect(),
        )
    }

    pub fn with_order(mut self, order: usize) -> Self {
        self.expected.get_or_insert_with(Expected::default).order = Some(order);
        self
    }

    pub fn with_class_number(mut self, k: usize) -> Self {
        self.expected
            .get_or_insert_with(Expected::default)
            .class_number = Some(k);
        self
    }

    pub fn expected_order(&self) -> Option<usize> {
        self.expected.as_ref().and_then(|e| e.order)
    }

    pub fn expected_class_number(&self) -> Option<usize> {
        self.expected.as_ref().and_then(|e| e.class_number)
    }

    pub fn permutations(&self) -> Result<Vec<Permutation>> {
        if self.degree == 0 {
            return Err(self.invalid("degree must be positive".into()));
        }
        self.generators
            .iter()
            .enumerate()
            .map(|(i, images)| {
                if images.len() != self.degree {
                    return Err(self.invalid(format!(
                        "generator {}: {} images for degree {}",
                        i + 1,
                        images.len(),
                        self.degree
                    )));
                }
                Permutation::from_one_based(images)
                    .map_err(|e| self.invalid(format!("generator {}: {e}", i + 1)))
            })
            .collect()
    }

    fn invalid(&self, message: String) -> Error {
        Error::Validation {
            source_name: self.name.clone(),
            message,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.permutations().map(drop)
    }

    pub fn materialize(&self) -> Result<Arc<FiniteGroup>> {
        self.materialize_with_cap(DEFAULT_ORDER_CAP)
    }

    /// Builds the group and checks any `expected` values.
    pub fn materialize_with_cap(&self, order_cap: usize) -> Result<Arc<FiniteGroup>> {
        let group = FiniteGroup::closure_with_cap(self.degree, self.permutations()?, order_cap)?;
        if let Some(order) = self.expected_order() {
            if group.order() != order {
                return Err(self.mismatch("order", order, group.order()));
            }
        }
        if let Some(k) = self.expected_class_number() {
            let found = ClassPartition::new(&group).count();
            if found != k {
                return Err(self.mismatch("class number", k, found));
            }
        }
        Ok(Arc::new(group))
    }

    fn mismatch(&self, field: &'static str, expected: usize, found: usize) -> Error {
        Error::ExpectationMismatch {
            name: self.name.clone(),
            field,
            expected,
            found,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("definitions serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str, source_name: &str) -> Result<Self> {
        let def: GroupDefinition = serde_json::from_str(text).map_err(|e| Error::Parse {
            source_name: source_name.to_string(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        def.validate().map_err(|e| match e {
            Error::Validation { message, .. } => Error::Validation {
                source_name: format!("{source_name} ({})", def.name),
                message,
            },
            other => other,
        })?;
        Ok(def)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        Self::from_json(&text, &path.display().to_string())
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_json())?;
        Ok(())
    }

    /// File stem used when writing a catalog directory.
    pub fn file_stem(&self) -> String {
        let mut out = String::new();
        for c in self.name.chars() {
            if c.is_ascii_alphanumeric() {
                out.push(c.to_ascii_lowercase());
            } else if !out.ends_with('_') {
                out.push('_');
            }
        }
        let trimmed = out.trim_matches('_');
        if trimmed.is_empty() {
            "group".to_string()
        } else {
            trimmed.to_string()
        }
    }
}

/// Loads every `*.json` file in `dir`, sorted by file name.
pub fn load_dir(dir: &Path) -> Result<Vec<(PathBuf, Result<GroupDefinition>)>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    Ok(paths
        .into_iter()
        .map(|p| {
            let def = GroupDefinition::load(&p);
            (p, def)
        })
        .collect())
}

/// Writes each definition to `dir/<file_stem>.json`.
pub fn save_dir(dir: &Path, defs: &[GroupDefinition]) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for d in defs {
        let path = dir.join(format!("{}.json", d.file_stem()));
        d.save(&path)?;
        written.push(path);
    }
    Ok(written)
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

fn perm(images: Vec<usize>) -> Permutation {
    Permutation::from_images(images.into_iter().map(|x| x as u32).collect())
        .expect("builder produced a bijection")
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&a| gcd(a, n) == 1).count()
}

/// Multiplicative order of `r` modulo `m` (`r` a unit, `m ≥ 2`).
fn mult_order(r: usize, m: usize) -> usize {
    let mut x = r % m;
    let mut k = 1;
    while x != 1 % m {
        x = x * r % m;
        k += 1;
    }
    k
}

fn pow_mod(r: usize, e: usize, m: usize) -> usize {
    (0..e).fold(1 % m, |acc, _| acc * r % m)
}

fn partition_count(n: usize) -> usize {
    let mut p = vec![0usize; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            p[total] += p[total - part];
        }
    }
    p[n]
}

pub fn trivial() -> GroupDefinition {
    GroupDefinition::new("1", 1, Vec::new())
        .with_order(1)
        .with_class_number(1)
}

/// `Z_n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> Result<GroupDefinition> {
    if n == 0 {
        return Err(invalid("cyclic group of order 0"));
    }
    if n == 1 {
        return Ok(trivial());
    }
    let shift = perm((0..n).map(|x| (x + 1) % n).collect());
    Ok(GroupDefinition::from_perms(format!("Z{n}"), n, &[shift])
        .with_order(n)
        .with_class_number(n))
}

/// `Z_{n₁} × … × Z_{n_k}` on disjoint point sets; factors equal to 1 are dropped.
pub fn abelian(factors: &[usize]) -> Result<GroupDefinition> {
    if factors.contains(&0) {
        return Err(invalid("cyclic factor of order 0"));
    }
    let factors: Vec<usize> = factors.iter().copied().filter(|&n| n > 1).collect();
    if factors.is_empty() {
        return Ok(trivial());
    }
    let mut acc = cyclic(factors[0])?;
    for &n in &factors[1..] {
        acc = direct_product(&acc, &cyclic(n)?);
    }
    Ok(acc)
}

/// Dihedral group of order `2n`: the symmetries of an `n`-gon for `n ≥ 3`,
/// the Klein four-group for `n = 2`.
pub fn dihedral(n: usize) -> Result<GroupDefinition> {
    let name = format!("D{n}");
    match n {
        0 | 1 => Err(invalid("dihedral groups need n >= 2")),
        2 => {
            let v = abelian(&[2, 2])?;
            Ok(GroupDefinition { name, ..v })
        }
        _ => {
            let rot = perm((0..n).map(|x| (x + 1) % n).collect());
            let refl = perm((0..n).map(|x| (n - x) % n).collect());
            let k = if n % 2 == 1 { (n + 3) / 2 } else { n / 2 + 3 };
            Ok(GroupDefinition::from_perms(name, n, &[rot, refl])
                .with_order(2 * n)
                .with_class_number(k))
        }
    }
}

pub fn symmetric(n: usize) -> Result<GroupDefinition> {
    if n == 0 {
        return Err(invalid("symmetric group on 0 points"));
    }
    let name = format!("S{n}");
    let order: usize = (1..=n).product();
    let mut gens = Vec::new();
    if n >= 2 {
        let mut t: Vec<usize> = (0..n).collect();
        t.swap(0, 1);
        gens.push(perm(t));
    }
    if n >= 3 {
        gens.push(perm((0..n).map(|x| (x + 1) % n).collect()));
    }
    Ok(GroupDefinition::from_perms(name, n, &gens)
        .with_order(order)
        .with_class_number(partition_count(n)))
}

pub fn alternating(n: usize) -> Result<GroupDefinition> {
    if n == 0 {
        return Err(invalid("alternating group on 0 points"));
    }
    let name = format!("A{n}");
    let order = if n < 2 {
        1
    } else {
        (1..=n).product::<usize>() / 2
    };
    let mut gens = Vec::new();
    if n >= 3 {
        let mut c: Vec<usize> = (0..n).collect();
        c[0] = 1;
        c[1] = 2;
        c[2] = 0;
        gens.push(perm(c));
    }
    if n >= 4 {
        // (1 2 .. n) for odd n, (2 3 .. n) for even n
        let start = if n % 2 == 1 { 0 } else { 1 };
        let mut c: Vec<usize> = (0..n).collect();
        for (x, slot) in c.iter_mut().enumerate().skip(start) {
            *slot = if x + 1 == n { start } else { x + 1 };
        }
        gens.push(perm(c));
    }
    Ok(GroupDefinition::from_perms(name, n, &gens).with_order(order))
}

/// Dicyclic group `⟨a, x | a^{2n}, x² = aⁿ, x a x⁻¹ = a⁻¹⟩` of order `4n`
/// in its regular representation; `n = 2` is the quaternion group `Q8`.
pub fn quaternion_dicyclic(n: usize) -> Result<GroupDefinition> {
    if n < 2 {
        return Err(invalid("dicyclic groups need n >= 2"));
    }
    let m = 2 * n;
    // element a^k x^e sits at point k + m·e
    let point = |k: usize, e: usize| k % m + m * e;
    let left_a = perm(
        (0..2 * m)
            .map(|p| {
                let (k, e) = (p % m, p / m);
                point(k + 1, e)
            })
            .collect(),
    );
    // x · a^k x^e = a^{-k} x^{1+e}, with x² = aⁿ
    let left_x = perm(
        (0..2 * m)
            .map(|p| {
                let (k, e) = (p % m, p / m);
                let k = (m - k) % m;
                if e == 0 {
                    point(k, 1)
                } else {
                    point(k + n, 0)
                }
            })
            .collect(),
    );
    let name = if n == 2 {
        "Q8".to_string()
    } else {
        format!("Dic{n}")
    };
    Ok(GroupDefinition::from_perms(name, 2 * m, &[left_a, left_x])
        .with_order(4 * n)
        .with_class_number(n + 3))
}

/// `Z_m ⋊ Z_n` with `b a b⁻¹ = a^r`. Realized affinely on `m` points when `r`
/// has multiplicative order exactly `n`, otherwise regularly on `m·n` points.
pub fn metacyclic(m: usize, n: usize, r: usize) -> Result<GroupDefinition> {
    if m < 2 || n < 1 {
        return Err(invalid("metacyclic groups need m >= 2 and n >= 1"));
    }
    if gcd(r % m, m) != 1 || pow_mod(r, n, m) != 1 {
        return Err(invalid(format!("{r}^{n} is not 1 modulo {m}")));
    }
    let r = r % m;
    let name = format!("Z{m}:Z{n}({r})");
    let def = if mult_order(r, m) == n {
        let shift = perm((0..m).map(|x| (x + 1) % m).collect());
        let scale = perm((0..m).map(|x| x * r % m).collect());
        GroupDefinition::from_perms(name, m, &[shift, scale])
    } else {
        // a^i b^j sits at point i + m·j
        let a = perm((0..m * n).map(|p| (p % m + 1) % m + m * (p / m)).collect());
        let b = perm(
            (0..m * n)
                .map(|p| (p % m) * r % m + m * ((p / m + 1) % n))
                .collect(),
        );
        GroupDefinition::from_perms(name, m * n, &[a, b])
    };
    Ok(def.with_order(m * n))
}

/// `A × B` on the disjoint union of the point sets.
pub fn direct_product(a: &GroupDefinition, b: &GroupDefinition) -> GroupDefinition {
    let degree = a.degree + b.degree;
    let mut gens = Vec::new();
    for g in &a.generators {
        gens.push(g.iter().copied().chain(a.degree + 1..=degree).collect());
    }
    for g in &b.generators {
        gens.push(
            (1..=a.degree)
                .chain(g.iter().map(|x| x + a.degree))
                .collect(),
        );
    }
    let mut def = GroupDefinition::new(format!("{}x{}", a.name, b.name), degree, gens);
    if let (Some(x), Some(y)) = (a.expected_order(), b.expected_order()) {
        def = def.with_order(x * y);
    }
    if let (Some(x), Some(y)) = (a.expected_class_number(), b.expected_class_number()) {
        def = def.with_class_number(x * y);
    }
    def
}

/// Smallest generating set of the unit group mod `n`, lexicographically first
/// among those of minimal size.
fn unit_generators(n: usize) -> Vec<usize> {
    let units: Vec<usize> = (2..n).filter(|&a| gcd(a, n) == 1).collect();
    let total = euler_phi(n);
    let generated = |gens: &[usize]| {
        let mut seen = vec![false; n];
        seen[1 % n] = true;
        let mut queue = vec![1 % n];
        let mut i = 0;
        while i < queue.len() {
            for &g in gens {
                let y = queue[i] * g % n;
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
            i += 1;
        }
        queue.len()
    };
    if total <= 1 {
        return Vec::new();
    }
    for size in 1..=units.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let gens: Vec<usize> = idx.iter().map(|&i| units[i]).collect();
            if generated(&gens) == total {
                return gens;
            }
            // next combination
            let mut i = size;
            while i > 0 && idx[i - 1] == units.len() - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    unreachable!("the unit group generates itself")
}

/// The affine group `x ↦ ax + b` on `Z_n`, i.e. `Z_n ⋊ Aut(Z_n)`.
pub fn holomorph_cyclic(n: usize) -> Result<GroupDefinition> {
    if n < 2 {
        return Err(invalid("holomorph needs n >= 2"));
    }
    let mut gens = vec![perm((0..n).map(|x| (x + 1) % n).collect())];
    for g in unit_generators(n) {
        gens.push(perm((0..n).map(|x| x * g % n).collect()));
    }
    Ok(GroupDefinition::from_perms(format!("Hol(Z{n})"), n, &gens).with_order(n * euler_phi(n)))
}

/// Linear maps of `F_p²` as permutations of the nonzero vectors, listed in
/// lexicographic order.
fn matrix_action(p: usize, m: [[usize; 2]; 2], affine: bool) -> Permutation {
    let vectors: Vec<(usize, usize)> = (0..p)
        .flat_map(|x| (0..p).map(move |y| (x, y)))
        .filter(|&v| affine || v != (0, 0))
        .collect();
    let index = |v: (usize, usize)| vectors.iter().position(|&w| w == v).unwrap();
    perm(
        vectors
            .iter()
            .map(|&(x, y)| {
                index((
                    (m[0][0] * x + m[0][1] * y) % p,
                    (m[1][0] * x + m[1][1] * y) % p,
                ))
            })
            .collect(),
    )
}

/// `(Z3 × Z3) ⋊ Q8` acting on the affine plane over `F_3`.
pub fn m9() -> GroupDefinition {
    let p = 3;
    let translation = perm(
        (0..9)
            .map(|i| {
                let (x, y) = (i / 3, i % 3);
                (x + 1) % p * 3 + y
            })
            .collect(),
    );
    // [[0,-1],[1,0]] and [[1,1],[1,-1]] over F_3
    let a = matrix_action(p, [[0, 2], [1, 0]], true);
    let b = matrix_action(p, [[1, 1], [1, 2]], true);
    GroupDefinition::from_perms("M9", 9, &[translation, a, b])
        .with_order(72)
        .with_class_number(6)
}

/// `SL(2, p)` for `p ∈ {3, 5}` acting on the nonzero vectors of `F_p²`.
pub fn sl2(p: usize) -> Result<GroupDefinition> {
    let k = match p {
        3 => 7,
        5 => 9,
        _ => return Err(invalid("sl2 is provided for p = 3 and p = 5")),
    };
    let t = matrix_action(p, [[1, 1], [0, 1]], false);
    let s = matrix_action(p, [[0, p - 1], [1, 0]], false);
    Ok(
        GroupDefinition::from_perms(format!("SL(2,{p})"), p * p - 1, &[t, s])
            .with_order(p * (p * p - 1))
            .with_class_number(k),
    )
}

/// The shipped catalog: small instances of every builder, all of order ≤ 120.
pub fn standard_catalog() -> Vec<GroupDefinition> {
    let b = |r: Result<GroupDefinition>| r.expect("catalog parameters are valid");
    let s3 = b(symmetric(3));
    let mut defs = vec![trivial()];
    for n in [2, 3, 4, 5, 6, 7, 8, 9, 11, 13, 27] {
        defs.push(b(cyclic(n)));
    }
    for f in [&[2, 2][..], &[2, 2, 2], &[2, 4], &[3, 3], &[5, 5]] {
        defs.push(b(abelian(f)));
    }
    for n in [4, 5, 6] {
        defs.push(b(dihedral(n)));
    }
    defs.push(b(quaternion_dicyclic(2)));
    defs.push(b(quaternion_dicyclic(3)));
    defs.push(s3.clone());
    defs.push(b(symmetric(4)));
    defs.push(b(symmetric(5)));
    defs.push(b(alternating(4)));
    defs.push(b(alternating(5)));
    defs.push(b(sl2(3)));
    defs.push(b(sl2(5)));
    for n in [5, 7, 8, 9, 10, 11, 15] {
        defs.push(b(holomorph_cyclic(n)));
    }
    defs.push(m9());
    defs.push(b(metacyclic(7, 3, 2)));
    defs.push(b(metacyclic(9, 3, 4)));
    defs.push(b(metacyclic(5, 4, 4)));
    defs.push(direct_product(&s3, &s3));
    defs.push(direct_product(&b(cyclic(3)), &s3));
    defs.push(direct_product(&b(cyclic(2)), &b(alternating(4))));
    defs.push(direct_product(&b(cyclic(2)), &b(symmetric(4))));
    defs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_and_k(def: &GroupDefinition) -> (usize, usize) {
        let g = def.materialize().unwrap();
        (g.order(), ClassPartition::new(&g).count())
    }

    #[test]
    fn small_builders() {
        assert_eq!(order_and_k(&cyclic(4).unwrap()), (4, 4));
        assert_eq!(order_and_k(&symmetric(4).unwrap()), (24, 5));
        assert_eq!(order_and_k(&metacyclic(7, 3, 2).unwrap()), (21, 5));
        assert_eq!(order_and_k(&quaternion_dicyclic(2).unwrap()), (8, 5));
        assert_eq!(order_and_k(&dihedral(2).unwrap()), (4, 4));
        assert_eq!(order_and_k(&alternating(4).unwrap()).0, 12);
        assert_eq!(order_and_k(&alternating(6).unwrap()), (360, 7));
        assert_eq!(order_and_k(&symmetric(1).unwrap()), (1, 1));
        assert_eq!(order_and_k(&abelian(&[1, 1]).unwrap()), (1, 1));
    }

    #[test]
    fn metacyclic_regular_fallback() {
        // r = 4 has order 2 mod 5, so Z5 ⋊ Z4 needs the regular action
        let d = metacyclic(5, 4, 4).unwrap();
        assert_eq!(d.degree, 20);
        assert_eq!(order_and_k(&d).0, 20);
        // r = 1: direct product Z3 × Z2
        let d = metacyclic(3, 2, 1).unwrap();
        let g = d.materialize().unwrap();
        assert!(g.is_abelian());
        assert_eq!(g.order(), 6);
        assert!(metacyclic(7, 3, 3).is_err());
        assert!(metacyclic(6, 2, 2).is_err());
    }

    #[test]
    fn holomorphs() {
        assert_eq!(order_and_k(&holomorph_cyclic(5).unwrap()), (20, 5));
        assert_eq!(order_and_k(&holomorph_cyclic(9).unwrap()), (54, 10));
        assert_eq!(order_and_k(&holomorph_cyclic(2).unwrap()).0, 2);
        assert_eq!(unit_generators(15).len(), 2);
        assert_eq!(unit_generators(7), vec![3]);
        assert_eq!(unit_generators(8), vec![3, 5]);
        assert!(holomorph_cyclic(1).is_err());
    }

    #[test]
    fn m9_and_sl2() {
        assert_eq!(order_and_k(&m9()), (72, 6));
        assert_eq!(order_and_k(&sl2(3).unwrap()).0, 24);
        assert_eq!(order_and_k(&sl2(5).unwrap()).0, 120);
        assert!(sl2(7).is_err());
    }

    #[test]
    fn catalog_is_consistent() {
        let defs = standard_catalog();
        let mut stems: Vec<String> = defs.iter().map(GroupDefinition::file_stem).collect();
        stems.sort();
        stems.dedup();
        assert_eq!(stems.len(), defs.len(), "file stems collide");
        for d in &defs {
            let g = d
                .materialize()
                .unwrap_or_else(|e| panic!("{}: {e}", d.name));
            assert!(g.order() <= 120, "{}", d.name);
            assert_eq!(Some(g.order()), d.expected_order(), "{}", d.name);
        }
    }

    #[test]
    fn json_round_trip() {
        let d = symmetric(3).unwrap();
        let back = GroupDefinition::from_json(&d.to_json(), "s3").unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn rejects_non_bijective_images() {
        let text = r#"{"name": "bad", "degree": 3, "generators": [[1, 1, 2]]}"#;
        let err = GroupDefinition::from_json(text, "bad.json").unwrap_err();
        assert!(matches!(err, Error::Validation { .. }), "{err}");
        assert!(err.to_string().contains("generator 1"));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let text = "{\n  \"name\": \"x\",\n  \"degree\": three\n}";
        match GroupDefinition::from_json(text, "x.json").unwrap_err() {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other}"),
        }
        let unknown = r#"{"name": "x", "degree": 1, "generators": [], "extra": 1}"#;
        assert!(matches!(
            GroupDefinition::from_json(unknown, "x.json"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn expectations_fail_loudly() {
        let d = cyclic(4).unwrap().with_class_number(3);
        assert!(matches!(
            d.materialize(),
            Err(Error::ExpectationMismatch {
                field: "class number",
                ..
            })
        ));
    }

    #[test]
    fn file_stems() {
        assert_eq!(holomorph_cyclic(5).unwrap().file_stem(), "hol_z5");
        assert_eq!(sl2(5).unwrap().file_stem(), "sl_2_5");
        assert_eq!(trivial().file_stem(), "1");
    }
}
