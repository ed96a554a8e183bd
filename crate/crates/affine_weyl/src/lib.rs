//! The extended affine Weyl group W̃ = t_P ⋊ W and its alcove geometry.
//!
//! Elements are stored as pairs e = t_λ·v (translation by a weight λ followed
//! by a finite Weyl element v), acting on weight space by x ↦ v(x) + λ.  The
//! affine hyperplane arrangement is H_{β,m} = {x : ⟨x,β^∨⟩ = m} over positive
//! roots β and integers m; the fundamental alcove A is the chamber between
//! the linear simple walls and H_{φ,1}, where φ is the positive root whose
//! coroot is the highest coroot (the highest short root outside the
//! simply-laced types).  Generators are ŝ_j for wall labels j ∈ {0,…,n}:
//! ŝ_0 = t_φ s_φ and ŝ_j = s_j for j ≥ 1.
//!
//! Length-zero elements form the subgroup Ω ≅ P/Q; they stabilize A and
//! permute the walls.  Every element factors uniquely as g·ŝ_{j₁}⋯ŝ_{jℓ} with
//! g ∈ Ω and ℓ the number of affine hyperplanes separating A from e·A.
//! Integer "sample points" h·λ + v(ρ) (h = 1 + ⟨ρ,φ^∨⟩) represent alcove
//! interiors exactly, so all side-of-wall queries are integer comparisons.

use root_data::{Root, RootDatum, Weight, WeylElt};
use std::collections::BTreeSet;
use std::fmt;

/// An element t_λ·v of the extended affine Weyl group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtAffElt {
    trans: Weight,
    fin: WeylElt,
}

impl ExtAffElt {
    pub fn translation_part(&self) -> &Weight {
        &self.trans
    }

    pub fn finite_part(&self) -> &WeylElt {
        &self.fin
    }
}

impl fmt::Display for ExtAffElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}·{}", self.trans, self.fin)
    }
}

/// The double coset W·t_λ·W: all elements, plus its unique minimal and
/// maximal length members.
#[derive(Debug, Clone)]
pub struct DoubleCoset {
    pub elements: Vec<ExtAffElt>,
    pub min: ExtAffElt,
    pub max: ExtAffElt,
}

/// Precomputed affine structure over one root datum.
pub struct AffineWeyl<'a> {
    datum: &'a RootDatum,
    phi_idx: usize,
    s_phi: WeylElt,
    h: i64,
    omega: Vec<ExtAffElt>,
    omega_perms: Vec<Vec<u8>>,
}

impl<'a> AffineWeyl<'a> {
    pub fn new(datum: &'a RootDatum) -> AffineWeyl<'a> {
        let n = datum.rank();
        // φ = the positive root with the highest coroot: its coroot
        // coordinates (⟨ω_1,β^∨⟩,…,⟨ω_n,β^∨⟩) dominate every other root's.
        let coroot_coords: Vec<Vec<i64>> = datum
            .pos_roots()
            .iter()
            .map(|b| (0..n).map(|i| datum.pair(&datum.fundamental_weight(i), b)).collect())
            .collect();
        let phi_idx = (0..coroot_coords.len())
            .find(|&k| {
                coroot_coords
                    .iter()
                    .all(|other| (0..n).all(|i| coroot_coords[k][i] >= other[i]))
            })
            .expect("a highest coroot exists");
        let phi = &datum.pos_roots()[phi_idx];
        let s_phi = datum.root_reflection(phi);
        let h = 1 + datum.pair(&datum.rho(), phi);

        let mut aff = AffineWeyl {
            datum,
            phi_idx,
            s_phi,
            h,
            omega: Vec::new(),
            omega_perms: Vec::new(),
        };

        // Ω: the identity plus, for each fundamental weight ω_i, the candidate
        // t_{ω_i}·(w_{0,i}w₀); exactly the length-zero candidates survive.
        let w0 = datum.longest_element();
        let mut omega = vec![aff.identity()];
        for i in 0..n {
            let sub: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            let w0i = datum.longest_parabolic(&sub);
            let cand = ExtAffElt {
                trans: datum.fundamental_weight(i),
                fin: datum.weyl_mult(&w0i, &w0),
            };
            if aff.length(&cand) == 0 {
                omega.push(cand);
            }
        }
        omega.sort();
        assert_eq!(omega.len() as i64, datum.cartan_det(), "|Ω| = |P/Q|");
        for g in &omega {
            assert_eq!(aff.separating_count(g), 0, "Ω elements stabilize A");
        }
        aff.omega = omega;

        // Wall permutations: g·ŝ_j·g⁻¹ is again a wall generator.
        let mut perms = Vec::new();
        for g in &aff.omega {
            let ginv = aff.inverse(g);
            let perm: Vec<u8> = (0..=n as u8)
                .map(|j| {
                    let conj = aff.mult(&aff.mult(g, &aff.generator(j)), &ginv);
                    (0..=n as u8)
                        .find(|&jp| aff.generator(jp) == conj)
                        .expect("Ω conjugation permutes the walls")
                })
                .collect();
            let distinct: BTreeSet<u8> = perm.iter().copied().collect();
            assert_eq!(distinct.len(), n + 1, "wall permutation is a bijection");
            perms.push(perm);
        }
        aff.omega_perms = perms;
        aff
    }

    pub fn datum(&self) -> &RootDatum {
        self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    /// Number of wall labels: 0 (affine) through n.
    pub fn num_walls(&self) -> usize {
        self.datum.rank() + 1
    }

    /// The root φ of the affine wall H_{φ,1}.
    pub fn phi(&self) -> &Root {
        &self.datum.pos_roots()[self.phi_idx]
    }

    pub fn phi_index(&self) -> usize {
        self.phi_idx
    }

    pub fn s_phi(&self) -> &WeylElt {
        &self.s_phi
    }

    /// Sample-point denominator h = 1 + ⟨ρ,φ^∨⟩.
    pub fn h(&self) -> i64 {
        self.h
    }

    // ----- group structure -----

    pub fn identity(&self) -> ExtAffElt {
        ExtAffElt { trans: Weight::zero(self.datum.rank()), fin: self.datum.identity() }
    }

    pub fn translation(&self, lambda: &Weight) -> ExtAffElt {
        ExtAffElt { trans: lambda.clone(), fin: self.datum.identity() }
    }

    pub fn finite(&self, w: &WeylElt) -> ExtAffElt {
        ExtAffElt { trans: Weight::zero(self.datum.rank()), fin: w.clone() }
    }

    pub fn from_parts(&self, lambda: &Weight, w: &WeylElt) -> ExtAffElt {
        ExtAffElt { trans: lambda.clone(), fin: w.clone() }
    }

    /// ŝ_j: the reflection in wall j of the fundamental alcove.
    pub fn generator(&self, wall: u8) -> ExtAffElt {
        if wall == 0 {
            ExtAffElt { trans: self.phi().as_weight().clone(), fin: self.s_phi.clone() }
        } else {
            self.finite(&self.datum.generator(wall as usize - 1))
        }
    }

    /// (t_λu)(t_μv) = t_{λ+uμ}·(uv).
    pub fn mult(&self, a: &ExtAffElt, b: &ExtAffElt) -> ExtAffElt {
        ExtAffElt {
            trans: a.trans.add(&self.datum.weyl_act(&a.fin, &b.trans)),
            fin: self.datum.weyl_mult(&a.fin, &b.fin),
        }
    }

    pub fn inverse(&self, a: &ExtAffElt) -> ExtAffElt {
        let vinv = self.datum.weyl_inverse(&a.fin);
        ExtAffElt { trans: self.datum.weyl_act(&vinv, &a.trans).neg(), fin: vinv }
    }

    /// ℓ(t_λv) = Σ_{β>0, v⁻¹β>0} |⟨λ,β^∨⟩| + Σ_{β>0, v⁻¹β<0} |⟨λ,β^∨⟩ − 1|.
    pub fn length(&self, e: &ExtAffElt) -> u64 {
        let vinv = self.datum.weyl_inverse(&e.fin);
        let mut total = 0u64;
        for beta in self.datum.pos_roots() {
            let k = self.datum.pair(&e.trans, beta);
            let img = self.datum.weyl_act(&vinv, beta.as_weight());
            let up = matches!(self.datum.root_sign(&img), Some((_, 1)));
            total += if up { k.unsigned_abs() } else { (k - 1).unsigned_abs() };
        }
        total
    }

    // ----- alcove geometry -----

    /// Integer sample point h·λ + v(ρ) of the alcove e·A (coordinates are h
    /// times a point interior to e·A, so no pairing is ever a multiple of h).
    pub fn sample_weight(&self, e: &ExtAffElt) -> Weight {
        e.trans.scale(self.h).add(&self.datum.weyl_act(&e.fin, &self.datum.rho()))
    }

    /// Which side of H_{β,m} the alcove e·A lies on: +1 above (⟨x,β^∨⟩ > m),
    /// −1 below.  Panics if the alcove were on the wall (impossible).
    pub fn side_of_wall(&self, e: &ExtAffElt, root_idx: usize, level: i64) -> i8 {
        let v = self.datum.pair(&self.sample_weight(e), &self.datum.pos_roots()[root_idx]);
        match v.cmp(&(level * self.h)) {
            std::cmp::Ordering::Greater => 1,
            std::cmp::Ordering::Less => -1,
            std::cmp::Ordering::Equal => unreachable!("alcove interior meets a wall"),
        }
    }

    /// The hyperplane crossed between e·A and e·ŝ_j·A, normalized to a
    /// positive root: returns (positive root index, level).
    pub fn crossed_hyperplane(&self, e: &ExtAffElt, wall: u8) -> (usize, i64) {
        let (beta0, m0): (&Root, i64) = if wall == 0 {
            (self.phi(), 1)
        } else {
            (self.datum.simple_root(wall as usize - 1), 0)
        };
        let img = self.datum.weyl_act(&e.fin, beta0.as_weight());
        let (idx, sign) = self.datum.root_sign(&img).expect("image of a root is a root");
        let level =
            i64::from(sign) * m0 + self.datum.pair(&e.trans, &self.datum.pos_roots()[idx]);
        (idx, level)
    }

    /// Number of affine hyperplanes separating A from e·A.  This is an
    /// independent length computation used as a test oracle.
    pub fn separating_count(&self, e: &ExtAffElt) -> u64 {
        let p0 = self.datum.rho();
        let pe = self.sample_weight(e);
        let mut total = 0u64;
        for beta in self.datum.pos_roots() {
            let a = self.datum.pair(&p0, beta);
            let b = self.datum.pair(&pe, beta);
            assert!(a % self.h != 0 && b % self.h != 0, "sample points avoid walls");
            total += (a.div_euclid(self.h) - b.div_euclid(self.h)).unsigned_abs();
        }
        total
    }

    // ----- Ω -----

    /// The length-zero subgroup, identity first, then sorted by translation
    /// part.
    pub fn omega(&self) -> &[ExtAffElt] {
        &self.omega
    }

    pub fn omega_index_of(&self, e: &ExtAffElt) -> Option<usize> {
        self.omega.iter().position(|g| g == e)
    }

    /// The wall permutation π of Ω element k: g·ŝ_j·g⁻¹ = ŝ_{π(j)}.
    pub fn omega_wall_perm(&self, k: usize) -> &[u8] {
        &self.omega_perms[k]
    }

    // ----- words -----

    /// Is ℓ(e·ŝ_j) < ℓ(e)?
    pub fn descends_right(&self, e: &ExtAffElt, wall: u8) -> bool {
        self.length(&self.mult(e, &self.generator(wall))) < self.length(e)
    }

    /// Factor e = g·ŝ_{j₁}⋯ŝ_{jℓ} with g ∈ Ω, peeling the smallest right
    /// descent, so the word is canonical.  Returns (index of g in Ω, word).
    pub fn reduced_expression(&self, e: &ExtAffElt) -> (usize, Vec<u8>) {
        let mut cur = e.clone();
        let mut len = self.length(&cur);
        let mut rev = Vec::with_capacity(len as usize);
        while len > 0 {
            let mut stepped = false;
            for wall in 0..self.num_walls() as u8 {
                let next = self.mult(&cur, &self.generator(wall));
                let nlen = self.length(&next);
                if nlen < len {
                    rev.push(wall);
                    cur = next;
                    len = nlen;
                    stepped = true;
                    break;
                }
            }
            assert!(stepped, "positive length requires a right descent");
        }
        let g = self.omega_index_of(&cur).expect("length-zero elements lie in Ω");
        rev.reverse();
        (g, rev)
    }

    /// Rebuild g·ŝ_{j₁}⋯ŝ_{jℓ} from an Ω index and a wall word.
    pub fn from_word(&self, omega_idx: usize, word: &[u8]) -> ExtAffElt {
        let mut e = self.omega[omega_idx].clone();
        for &j in word {
            e = self.mult(&e, &self.generator(j));
        }
        e
    }

    // ----- cosets -----

    /// Minimal-length representatives of W/W_S, where W_S is the standard
    /// parabolic generated by `stab_gens`, sorted by (length, word).
    pub fn min_coset_reps(&self, stab_gens: &[usize]) -> Vec<WeylElt> {
        self.datum
            .weyl_elements()
            .iter()
            .filter(|w| {
                stab_gens.iter().all(|&j| {
                    matches!(
                        self.datum
                            .root_sign(&self.datum.weyl_act(w, self.datum.simple_root(j).as_weight())),
                        Some((_, 1))
                    )
                })
            })
            .cloned()
            .collect()
    }

    /// Minimal-length representatives of W^λ = W/W_λ for a dominant λ
    /// (W_λ is generated by the s_j with ⟨λ,α_j^∨⟩ = 0).
    pub fn min_reps_for(&self, lambda: &Weight) -> Vec<WeylElt> {
        assert!(lambda.is_dominant(), "minimal coset representatives need a dominant weight");
        let stab: Vec<usize> =
            (0..self.datum.rank()).filter(|&j| lambda.coords()[j] == 0).collect();
        self.min_coset_reps(&stab)
    }

    /// The double coset W·t_λ·W with its unique shortest and longest members.
    pub fn double_coset(&self, lambda: &Weight) -> DoubleCoset {
        let t = self.translation(lambda);
        let mut set: BTreeSet<ExtAffElt> = BTreeSet::new();
        for u in self.datum.weyl_elements() {
            let ut = self.mult(&self.finite(u), &t);
            for v in self.datum.weyl_elements() {
                set.insert(self.mult(&ut, &self.finite(v)));
            }
        }
        let mut with_len: Vec<(u64, ExtAffElt)> =
            set.into_iter().map(|e| (self.length(&e), e)).collect();
        with_len.sort();
        let lmin = with_len.first().expect("nonempty coset").0;
        let lmax = with_len.last().expect("nonempty coset").0;
        assert_eq!(with_len.iter().filter(|(l, _)| *l == lmin).count(), 1, "unique minimum");
        assert_eq!(with_len.iter().filter(|(l, _)| *l == lmax).count(), 1, "unique maximum");
        let min = with_len.first().unwrap().1.clone();
        let max = with_len.last().unwrap().1.clone();
        DoubleCoset { elements: with_len.into_iter().map(|(_, e)| e).collect(), min, max }
    }
}
