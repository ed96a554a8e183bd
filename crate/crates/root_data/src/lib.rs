//! Finite root systems of types A–D and G₂, with exact Weyl group arithmetic.
//!
//! Everything is expressed in the fundamental-weight basis: a weight λ is the
//! integer vector (⟨λ,α₁^∨⟩, …, ⟨λ,α_n^∨⟩), so every pairing against a simple
//! coroot is a coordinate lookup.  The Cartan matrix convention is
//! `cartan[i][j] = ⟨α_j, α_i^∨⟩`, which makes column `j` the weight coordinates
//! of the simple root α_j.  Pairings against non-simple coroots go through a
//! reflection witness β = s_{j₁}⋯s_{j_k}(α_i) recorded when the root table is
//! generated, keeping all arithmetic integral.
//!
//! Weyl elements are stored as the matrix of their action on the weight
//! lattice together with a canonical reduced word recomputed from the matrix,
//! so equality, hashing, and ordering never depend on how an element was
//! produced.

use laurent::LaurentPoly;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

/// Simple Lie type families supported by [`RootDatum::build`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// Errors from root-datum construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootDataError {
    UnsupportedRank { family: Family, rank: usize },
}

impl fmt::Display for RootDataError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootDataError::UnsupportedRank { family, rank } => {
                write!(f, "unsupported rank {rank} for family {family}")
            }
        }
    }
}

impl std::error::Error for RootDataError {}

/// A weight in the fundamental-weight basis: coordinate i is ⟨λ, α_i^∨⟩.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight { coords: vec![0; rank] }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect() }
    }

    pub fn neg(&self) -> Weight {
        Weight { coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight { coords: self.coords.iter().map(|c| c * k).collect() }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A root, stored both over the simple roots and as a weight, with a
/// reflection witness for exact coroot pairings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    simple_coords: Vec<i64>,
    weight_coords: Weight,
    /// β = s_{w[0]}(s_{w[1]}(… s_{w.last()}(α_source) …)).
    witness_word: Vec<u8>,
    witness_source: u8,
}

impl Root {
    pub fn simple_coords(&self) -> &[i64] {
        &self.simple_coords
    }

    pub fn as_weight(&self) -> &Weight {
        &self.weight_coords
    }

    pub fn height(&self) -> i64 {
        self.simple_coords.iter().sum()
    }
}

/// An element of the finite Weyl group.  `mat` is row-major n×n with column j
/// holding the weight coordinates of w(ω_j); `word` is the canonical reduced
/// word recomputed from `mat` (smallest right descent first when peeling).
#[derive(Debug, Clone)]
pub struct WeylElt {
    mat: Vec<i64>,
    word: Vec<u8>,
}

impl PartialEq for WeylElt {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}

impl Eq for WeylElt {}

impl std::hash::Hash for WeylElt {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

impl PartialOrd for WeylElt {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElt {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.word.len(), &self.word, &self.mat).cmp(&(other.word.len(), &other.word, &other.mat))
    }
}

impl WeylElt {
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn det(&self) -> i64 {
        if self.word.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        for (k, i) in self.word.iter().enumerate() {
            if k > 0 {
                write!(f, "·")?;
            }
            write!(f, "s{}", i + 1)?;
        }
        Ok(())
    }
}

/// Immutable tables for one finite root system.
#[derive(Debug)]
pub struct RootDatum {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    pos_roots: Vec<Root>,
    /// weight coords → (index into pos_roots, sign)
    root_lookup: BTreeMap<Vec<i64>, (usize, i8)>,
    simple_mats: Vec<Vec<i64>>,
    highest_root: usize,
    weyl_order: u64,
    weyl_cache: OnceLock<Vec<WeylElt>>,
}

impl RootDatum {
    /// Build the datum for one family and rank.  Supported: A₁–A₈, B₂–B₈,
    /// C₂–C₈, D₃–D₈, G₂.  The C family is labeled with α₁ long (C₂ Cartan
    /// [[2,−1],[−2,2]], α₁ = 2ε₁ in the ε-realization); B is its dual.
    pub fn build(family: Family, rank: usize) -> Result<RootDatum, RootDataError> {
        let ok = match family {
            Family::A => (1..=8).contains(&rank),
            Family::B | Family::C => (2..=8).contains(&rank),
            Family::D => (3..=8).contains(&rank),
            Family::G => rank == 2,
        };
        if !ok {
            return Err(RootDataError::UnsupportedRank { family, rank });
        }
        let n = rank;
        let mut cartan = vec![vec![0i64; n]; n];
        for i in 0..n {
            cartan[i][i] = 2;
        }
        let link = |c: &mut Vec<Vec<i64>>, i: usize, j: usize, a: i64, b: i64| {
            c[i][j] = a; // ⟨α_j, α_i^∨⟩
            c[j][i] = b; // ⟨α_i, α_j^∨⟩
        };
        match family {
            Family::A => {
                for i in 0..n.saturating_sub(1) {
                    link(&mut cartan, i, i + 1, -1, -1);
                }
            }
            Family::B => {
                // α₁ = ε₁ short, α_i = ε_i − ε_{i−1}.
                link(&mut cartan, 0, 1, -2, -1);
                for i in 1..n - 1 {
                    link(&mut cartan, i, i + 1, -1, -1);
                }
            }
            Family::C => {
                // α₁ = 2ε₁ long, α_i = ε_i − ε_{i−1}.
                link(&mut cartan, 0, 1, -1, -2);
                for i in 1..n - 1 {
                    link(&mut cartan, i, i + 1, -1, -1);
                }
            }
            Family::D => {
                // Fork at the start: α₁ = ε₁+ε₂, α₂ = ε₂−ε₁, both tied to α₃.
                if n >= 3 {
                    link(&mut cartan, 0, 2, -1, -1);
                    link(&mut cartan, 1, 2, -1, -1);
                    for i in 2..n - 1 {
                        link(&mut cartan, i, i + 1, -1, -1);
                    }
                }
            }
            Family::G => {
                // α₁ long: ⟨α₁, α₂^∨⟩ = −3.
                link(&mut cartan, 0, 1, -1, -3);
            }
        }

        let simple_mats: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                // Matrix of s_i on weight coordinates: λ ↦ λ − λ_i α_i.
                let mut m = vec![0i64; n * n];
                for c in 0..n {
                    for r in 0..n {
                        let id = i64::from(r == c);
                        m[r * n + c] = id - if c == i { cartan[r][i] } else { 0 };
                    }
                }
                m
            })
            .collect();

        // Generate the positive roots by reflection closure from the simples.
        let mut roots: Vec<Root> = (0..n)
            .map(|i| {
                let mut sc = vec![0i64; n];
                sc[i] = 1;
                Root {
                    simple_coords: sc,
                    weight_coords: Weight::new((0..n).map(|r| cartan[r][i]).collect()),
                    witness_word: Vec::new(),
                    witness_source: i as u8,
                }
            })
            .collect();
        let mut seen: BTreeSet<Vec<i64>> = roots.iter().map(|r| r.simple_coords.clone()).collect();
        let mut queue: VecDeque<usize> = (0..n).collect();
        while let Some(k) = queue.pop_front() {
            for i in 0..n {
                let pairing = roots[k].weight_coords.coords()[i];
                let mut sc = roots[k].simple_coords.clone();
                sc[i] -= pairing;
                if sc.iter().all(|&c| c >= 0) && !seen.contains(&sc) {
                    let wc = Weight::new(
                        (0..n)
                            .map(|r| {
                                roots[k].weight_coords.coords()[r] - pairing * cartan[r][i]
                            })
                            .collect(),
                    );
                    let mut ww = vec![i as u8];
                    ww.extend_from_slice(&roots[k].witness_word);
                    seen.insert(sc.clone());
                    roots.push(Root {
                        simple_coords: sc,
                        weight_coords: wc,
                        witness_word: ww,
                        witness_source: roots[k].witness_source,
                    });
                    queue.push_back(roots.len() - 1);
                }
            }
        }
        roots.sort_by(|a, b| {
            (a.height(), &a.simple_coords).cmp(&(b.height(), &b.simple_coords))
        });

        let expected = match family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::G => 6,
        };
        assert_eq!(roots.len(), expected, "positive root count for {family}{n}");

        let mut root_lookup = BTreeMap::new();
        for (idx, r) in roots.iter().enumerate() {
            root_lookup.insert(r.weight_coords.coords().to_vec(), (idx, 1i8));
            root_lookup.insert(r.weight_coords.neg().coords().to_vec(), (idx, -1i8));
        }
        let highest_root = roots.len() - 1;

        let weyl_order: u64 = match family {
            Family::A => (1..=n as u64 + 1).product(),
            Family::B | Family::C => (1..=n as u64).product::<u64>() << n,
            Family::D => (1..=n as u64).product::<u64>() << (n - 1),
            Family::G => 12,
        };

        Ok(RootDatum {
            family,
            rank,
            cartan,
            pos_roots: roots,
            root_lookup,
            simple_mats,
            highest_root,
            weyl_order,
            weyl_cache: OnceLock::new(),
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn pos_roots(&self) -> &[Root] {
        &self.pos_roots
    }

    pub fn num_pos_roots(&self) -> usize {
        self.pos_roots.len()
    }

    pub fn simple_root(&self, i: usize) -> &Root {
        &self.pos_roots[self.simple_root_index(i)]
    }

    /// Index of α_i inside `pos_roots` (the table is sorted by height, so the
    /// simples occupy the first `rank` slots, but in lex order).
    pub fn simple_root_index(&self, i: usize) -> usize {
        (0..self.rank)
            .find(|&k| self.pos_roots[k].simple_coords[i] == 1)
            .expect("simple roots are tabled")
    }

    /// The highest root φ (the wall of the fundamental alcove at level 1).
    pub fn highest_root(&self) -> &Root {
        &self.pos_roots[self.highest_root]
    }

    pub fn weyl_order(&self) -> u64 {
        self.weyl_order
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut c = vec![0i64; self.rank];
        c[i] = 1;
        Weight::new(c)
    }

    pub fn rho(&self) -> Weight {
        Weight::new(vec![1; self.rank])
    }

    fn assert_rank(&self, w: &Weight) {
        assert_eq!(w.rank(), self.rank, "weight rank does not match datum rank");
    }

    /// ⟨λ, β^∨⟩ for a tabled root β, through its reflection witness.
    pub fn pair(&self, lambda: &Weight, beta: &Root) -> i64 {
        self.assert_rank(lambda);
        let mut mu = lambda.clone();
        for &j in &beta.witness_word {
            mu = self.simple_reflect(j as usize, &mu);
        }
        mu.coords()[beta.witness_source as usize]
    }

    /// s_i(λ) = λ − ⟨λ,α_i^∨⟩ α_i.
    pub fn simple_reflect(&self, i: usize, lambda: &Weight) -> Weight {
        self.assert_rank(lambda);
        let ci = lambda.coords()[i];
        Weight::new(
            (0..self.rank).map(|r| lambda.coords()[r] - ci * self.cartan[r][i]).collect(),
        )
    }

    /// Reflection in a tabled root: s_β(λ) = λ − ⟨λ,β^∨⟩β.
    pub fn root_reflect(&self, beta: &Root, lambda: &Weight) -> Weight {
        let k = self.pair(lambda, beta);
        lambda.sub(&beta.as_weight().scale(k))
    }

    /// Classify a weight as ± a tabled positive root.
    pub fn root_sign(&self, coords: &Weight) -> Option<(usize, i8)> {
        self.root_lookup.get(coords.coords()).copied()
    }

    // ----- Weyl elements -----

    pub fn identity(&self) -> WeylElt {
        let n = self.rank;
        let mut mat = vec![0i64; n * n];
        for d in 0..n {
            mat[d * n + d] = 1;
        }
        WeylElt { mat, word: Vec::new() }
    }

    pub fn generator(&self, i: usize) -> WeylElt {
        WeylElt { mat: self.simple_mats[i].clone(), word: vec![i as u8] }
    }

    pub fn from_word(&self, word: &[usize]) -> WeylElt {
        let mut w = self.identity();
        for &i in word {
            w = self.weyl_mult(&w, &self.generator(i));
        }
        w
    }

    fn mat_mul(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let n = self.rank;
        let mut out = vec![0i64; n * n];
        for r in 0..n {
            for k in 0..n {
                let av = a[r * n + k];
                if av == 0 {
                    continue;
                }
                for c in 0..n {
                    out[r * n + c] += av * b[k * n + c];
                }
            }
        }
        out
    }

    fn mat_apply(&self, m: &[i64], lambda: &Weight) -> Weight {
        let n = self.rank;
        Weight::new(
            (0..n)
                .map(|r| (0..n).map(|c| m[r * n + c] * lambda.coords()[c]).sum())
                .collect(),
        )
    }

    /// Canonical reduced word from the matrix: repeatedly strip the smallest
    /// right descent (w(α_i) < 0 ⟺ ℓ(w s_i) < ℓ(w)).
    fn descent_word(&self, mat: &[i64]) -> Vec<u8> {
        let mut m = mat.to_vec();
        let mut rev = Vec::new();
        loop {
            let mut descent = None;
            for i in 0..self.rank {
                let img = self.mat_apply(&m, self.simple_root(i).as_weight());
                match self.root_sign(&img) {
                    Some((_, -1)) => {
                        descent = Some(i);
                        break;
                    }
                    Some(_) => {}
                    None => unreachable!("image of a root is a root"),
                }
            }
            match descent {
                Some(i) => {
                    rev.push(i as u8);
                    m = self.mat_mul(&m, &self.simple_mats[i]);
                }
                None => break,
            }
        }
        rev.reverse();
        rev
    }

    pub fn weyl_mult(&self, u: &WeylElt, v: &WeylElt) -> WeylElt {
        let mat = self.mat_mul(&u.mat, &v.mat);
        let word = self.descent_word(&mat);
        WeylElt { mat, word }
    }

    pub fn weyl_inverse(&self, w: &WeylElt) -> WeylElt {
        let mut mat = self.identity().mat;
        for &i in w.word.iter().rev() {
            mat = self.mat_mul(&mat, &self.simple_mats[i as usize]);
        }
        let word = self.descent_word(&mat);
        WeylElt { mat, word }
    }

    pub fn weyl_act(&self, w: &WeylElt, lambda: &Weight) -> Weight {
        self.assert_rank(lambda);
        self.mat_apply(&w.mat, lambda)
    }

    /// ℓ(w s_i) > ℓ(w)?
    pub fn ascends_right(&self, w: &WeylElt, i: usize) -> bool {
        let img = self.weyl_act(w, self.simple_root(i).as_weight());
        matches!(self.root_sign(&img), Some((_, 1)))
    }

    pub fn longest_element(&self) -> WeylElt {
        self.longest_parabolic(&(0..self.rank).collect::<Vec<_>>())
    }

    /// Longest element of the standard parabolic subgroup generated by
    /// `{s_j : j ∈ gens}` (greedy ascent inside the parabolic).
    pub fn longest_parabolic(&self, gens: &[usize]) -> WeylElt {
        let mut w = self.identity();
        loop {
            let mut extended = false;
            for &i in gens {
                if self.ascends_right(&w, i) {
                    w = self.weyl_mult(&w, &self.generator(i));
                    extended = true;
                    break;
                }
            }
            if !extended {
                return w;
            }
        }
    }

    /// The reflection s_β as a Weyl group element, for a tabled root β.
    pub fn root_reflection(&self, beta: &Root) -> WeylElt {
        let n = self.rank;
        let mut mat = vec![0i64; n * n];
        for c in 0..n {
            let img = self.root_reflect(beta, &self.fundamental_weight(c));
            for r in 0..n {
                mat[r * n + c] = img.coords()[r];
            }
        }
        let word = self.descent_word(&mat);
        WeylElt { mat, word }
    }

    /// All Weyl elements, BFS from the identity with generator-order tiebreak,
    /// so the list is sorted by (length, canonical word).  Cached.
    pub fn weyl_elements(&self) -> &[WeylElt] {
        self.weyl_cache.get_or_init(|| {
            let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
            let id = self.identity();
            seen.insert(id.mat.clone());
            let mut order = vec![id];
            let mut head = 0;
            while head < order.len() {
                let cur = order[head].clone();
                head += 1;
                for i in 0..self.rank {
                    let next = self.weyl_mult(&cur, &self.generator(i));
                    if seen.insert(next.mat.clone()) {
                        order.push(next);
                    }
                }
            }
            assert_eq!(order.len() as u64, self.weyl_order, "Weyl group order");
            order.sort();
            order
        })
    }

    /// The orbit Wλ, sorted descending in the graded-lex order.
    pub fn weyl_orbit(&self, lambda: &Weight) -> Vec<Weight> {
        self.assert_rank(lambda);
        let mut seen = BTreeSet::new();
        seen.insert(lambda.clone());
        let mut queue = VecDeque::new();
        queue.push_back(lambda.clone());
        while let Some(mu) = queue.pop_front() {
            for i in 0..self.rank {
                let nu = self.simple_reflect(i, &mu);
                if seen.insert(nu.clone()) {
                    queue.push_back(nu);
                }
            }
        }
        let mut orbit: Vec<Weight> = seen.into_iter().collect();
        orbit.sort_by(|a, b| self.cmp_graded_lex(b, a));
        orbit
    }

    /// Poincaré polynomial W_λ(t) = Σ_{w·λ=λ} t^{ℓ(w)} of the stabilizer.
    pub fn stabilizer_poincare(&self, lambda: &Weight) -> LaurentPoly {
        self.assert_rank(lambda);
        let mut p = LaurentPoly::zero();
        for w in self.weyl_elements() {
            if &self.weyl_act(w, lambda) == lambda {
                p.add_term(w.length() as i64, 1);
            }
        }
        p
    }

    /// Poincaré polynomial W₀(t) of the full Weyl group.
    pub fn poincare(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for w in self.weyl_elements() {
            p.add_term(w.length() as i64, 1);
        }
        p
    }

    /// Integral solve of (Cartan)·x = coords; `None` when μ is not in the root
    /// lattice.  Used for dominance tests and partition-function coordinates.
    pub fn simple_root_coords(&self, mu: &Weight) -> Option<Vec<i64>> {
        self.assert_rank(mu);
        let n = self.rank;
        // Fraction-free Gaussian elimination in i128.
        let mut a = vec![vec![0i128; n + 1]; n];
        for r in 0..n {
            for c in 0..n {
                a[r][c] = self.cartan[r][c] as i128;
            }
            a[r][n] = mu.coords()[r] as i128;
        }
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r][col] != 0)?;
            a.swap(col, piv);
            for r in 0..n {
                if r != col && a[r][col] != 0 {
                    let (p, q) = (a[col][col], a[r][col]);
                    for c in 0..=n {
                        a[r][c] = a[r][c] * p - a[col][c] * q;
                    }
                }
            }
        }
        let mut x = vec![0i64; n];
        for r in 0..n {
            if a[r][n] % a[r][r] != 0 {
                return None;
            }
            let v = a[r][n] / a[r][r];
            x[r] = i64::try_from(v).ok()?;
        }
        Some(x)
    }

    /// Dominance order: λ ≤ μ iff μ − λ is a nonnegative integer combination
    /// of simple roots.
    pub fn dominance_leq(&self, lambda: &Weight, mu: &Weight) -> bool {
        match self.simple_root_coords(&mu.sub(lambda)) {
            Some(x) => x.iter().all(|&c| c >= 0),
            None => false,
        }
    }

    /// Grading by total coroot height: g(λ) = Σ_{α>0} ⟨λ,α^∨⟩ = 2⟨λ,ρ^∨⟩.
    /// Strictly positive on nonzero ℕ-spans of simple roots, so (g, lex)
    /// refines dominance.
    pub fn coroot_height(&self, lambda: &Weight) -> i64 {
        self.pos_roots.iter().map(|r| self.pair(lambda, r)).sum()
    }

    pub fn cmp_graded_lex(&self, a: &Weight, b: &Weight) -> std::cmp::Ordering {
        (self.coroot_height(a), a.coords()).cmp(&(self.coroot_height(b), b.coords()))
    }

    /// det of the Cartan matrix = |P/Q|.
    pub fn cartan_det(&self) -> i64 {
        let n = self.rank;
        let mut a = vec![vec![0i128; n]; n];
        for r in 0..n {
            for c in 0..n {
                a[r][c] = self.cartan[r][c] as i128;
            }
        }
        // Bareiss fraction-free determinant.
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if a[k][k] == 0 {
                let Some(p) = (k + 1..n).find(|&r| a[r][k] != 0) else { return 0 };
                a.swap(k, p);
                sign = -sign;
            }
            for r in k + 1..n {
                for c in k + 1..n {
                    a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
                }
                a[r][k] = 0;
            }
            prev = a[k][k];
        }
        (sign * a[n - 1][n - 1]) as i64
    }
}
