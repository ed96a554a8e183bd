//! Alcove walks: crossings and folds under the periodic orientation.
//!
//! A walk starts in an alcove `start·A` and proceeds by steps, each labeled
//! by a wall of the current alcove (0 = the affine wall, j ≥ 1 = the wall of
//! the finite generator j−1) or by a length-zero element Ω.  A crossing moves
//! to the adjacent alcove; a fold bounces off the wall and stays.  Signs are
//! read off the periodic orientation whose most negative point lies deep in
//! the antidominant chamber: a crossing is positive when it moves from the
//! negative to the positive side of its hyperplane, and a fold is positive
//! when its alcove sits on the positive side.
//!
//! On top of the raw geometry this crate provides the straightening
//! expansion (products of crossing letters with wrong signs resolve into
//! sums of walks), the enumeration of positively folded walks of a fixed
//! type, the crystal-style root operators acting on the outer edge of a
//! projected walk, dominance, and the concatenation product with its
//! fold-repair rule.

use affine_weyl::{AffineWeyl, ExtAffElt};
use root_data::{Weight, WeylElt};
use std::fmt;

/// Whether a step passes through its wall or bounces off it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StepKind {
    Crossing,
    Fold,
}

/// A fully resolved step: geometry (hyperplane and sign) is recorded so that
/// statistics and root operators never have to re-walk the prefix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LetterStep {
    pub wall: u8,
    pub kind: StepKind,
    /// Crossing: side of the destination alcove. Fold: side of the alcove.
    pub sign: i8,
    /// Index into `pos_roots` of the crossed/touched hyperplane's root.
    pub root_idx: usize,
    /// The hyperplane is {⟨x, β^∨⟩ = level} for that root β.
    pub level: i64,
}

/// One step of a walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// Right multiplication by the length-zero element with this index.
    Omega(usize),
    Letter(LetterStep),
}

/// A step stripped down to the data that survives re-positioning: label and
/// kind.  Replaying a shape from a start alcove recomputes all geometry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeStep {
    Omega(usize),
    Letter(u8, StepKind),
}

/// A step request used by straightening: a crossing intent with a sign, or a
/// fold intent with a sign, or an Ω move.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputLetter {
    Omega(usize),
    Letter { wall: u8, kind: StepKind, sign: i8 },
}

/// A walk: start alcove, resolved steps, end alcove.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk {
    start: ExtAffElt,
    steps: Vec<Step>,
    end: ExtAffElt,
}

impl Walk {
    pub fn start(&self) -> &ExtAffElt {
        &self.start
    }

    pub fn end(&self) -> &ExtAffElt {
        &self.end
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Weight: the end alcove is wt + φ·A.
    pub fn wt(&self) -> &Weight {
        self.end.translation_part()
    }

    /// Final direction φ.
    pub fn phi_dir(&self) -> &WeylElt {
        self.end.finite_part()
    }

    /// Initial direction ι.
    pub fn iota_dir(&self) -> &WeylElt {
        self.start.finite_part()
    }

    pub fn f_plus(&self) -> usize {
        self.fold_count(1)
    }

    pub fn f_minus(&self) -> usize {
        self.fold_count(-1)
    }

    pub fn num_folds(&self) -> usize {
        self.f_plus() + self.f_minus()
    }

    fn fold_count(&self, sign: i8) -> usize {
        self.steps
            .iter()
            .filter(|s| matches!(s, Step::Letter(l) if l.kind == StepKind::Fold && l.sign == sign))
            .count()
    }

    /// Label-and-kind skeleton, suitable for replaying from another start.
    pub fn shape(&self) -> Vec<ShapeStep> {
        self.steps
            .iter()
            .map(|s| match s {
                Step::Omega(k) => ShapeStep::Omega(*k),
                Step::Letter(l) => ShapeStep::Letter(l.wall, l.kind),
            })
            .collect()
    }

    /// The walk as straightening input: every step with its recorded sign.
    pub fn as_input(&self) -> Vec<InputLetter> {
        self.steps
            .iter()
            .map(|s| match s {
                Step::Omega(k) => InputLetter::Omega(*k),
                Step::Letter(l) => InputLetter::Letter {
                    wall: l.wall,
                    kind: l.kind,
                    sign: l.sign,
                },
            })
            .collect()
    }

    /// Crossing intents of a nonfolded walk (its type with intended signs).
    pub fn pattern(&self) -> Vec<InputLetter> {
        assert_eq!(self.num_folds(), 0, "patterns come from nonfolded walks");
        self.as_input()
    }

    /// The type of the walk: its sequence of labels (Ω indices negated).
    pub fn type_labels(&self) -> Vec<i32> {
        self.steps
            .iter()
            .map(|s| match s {
                Step::Omega(k) => -(*k as i32) - 1,
                Step::Letter(l) => l.wall as i32,
            })
            .collect()
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.start)?;
        for s in &self.steps {
            match s {
                Step::Omega(k) => write!(f, " g{}", k)?,
                Step::Letter(l) => write!(
                    f,
                    " {}{}{}",
                    if l.kind == StepKind::Crossing { 'c' } else { 'f' },
                    l.wall,
                    if l.sign > 0 { '+' } else { '-' }
                )?,
            }
        }
        Ok(())
    }
}

/// The statistics of a walk used by the Hall–Littlewood expansions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkStats {
    pub wt: Weight,
    pub iota: WeylElt,
    pub phi: WeylElt,
    pub f_plus: usize,
    pub f_minus: usize,
    /// Folds lying on a linear hyperplane H_{α_i} of a simple root.
    pub c: usize,
}

/// A walk together with the (−1)^{f⁻} bookkeeping sign of straightening.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedWalkTerm {
    pub walk: Walk,
    pub sign: i64,
}

/// Sign of crossing the labeled wall out of alcove `e`: positive when the
/// move goes from the negative to the positive side of the hyperplane.
pub fn crossing_sign(aff: &AffineWeyl, e: &ExtAffElt, wall: u8) -> i8 {
    let (root_idx, level) = aff.crossed_hyperplane(e, wall);
    -aff.side_of_wall(e, root_idx, level)
}

/// The zero-step walk sitting in the alcove of `start`.
pub fn empty_walk(start: ExtAffElt) -> Walk {
    Walk {
        end: start.clone(),
        start,
        steps: Vec::new(),
    }
}

/// Replay a shape from a start alcove, resolving all geometry.
pub fn replay(aff: &AffineWeyl, start: &ExtAffElt, shape: &[ShapeStep]) -> Walk {
    let mut e = start.clone();
    let mut steps = Vec::with_capacity(shape.len());
    for s in shape {
        match *s {
            ShapeStep::Omega(k) => {
                e = aff.mult(&e, &aff.omega()[k]);
                steps.push(Step::Omega(k));
            }
            ShapeStep::Letter(wall, kind) => {
                let (root_idx, level) = aff.crossed_hyperplane(&e, wall);
                let side = aff.side_of_wall(&e, root_idx, level);
                let sign = match kind {
                    StepKind::Crossing => -side,
                    StepKind::Fold => side,
                };
                steps.push(Step::Letter(LetterStep {
                    wall,
                    kind,
                    sign,
                    root_idx,
                    level,
                }));
                if kind == StepKind::Crossing {
                    e = aff.mult(&e, &aff.generator(wall));
                }
            }
        }
    }
    Walk {
        start: start.clone(),
        steps,
        end: e,
    }
}

/// Minimal-length nonfolded walk from A to the target's alcove.
pub fn min_walk(aff: &AffineWeyl, target: &ExtAffElt) -> Walk {
    let (omega_idx, word) = aff.reduced_expression(target);
    let mut shape = Vec::with_capacity(word.len() + 1);
    if omega_idx != 0 {
        shape.push(ShapeStep::Omega(omega_idx));
    }
    shape.extend(word.iter().map(|&w| ShapeStep::Letter(w, StepKind::Crossing)));
    let p = replay(aff, &aff.identity(), &shape);
    assert_eq!(&p.end, target, "minimal walk must land on its target");
    p
}

/// Minimal-length walk from A to wA (all crossings come out negative).
pub fn min_chamber_walk(aff: &AffineWeyl, w: &WeylElt) -> Walk {
    let shape: Vec<ShapeStep> = w
        .word()
        .iter()
        .map(|&j| ShapeStep::Letter(j + 1, StepKind::Crossing))
        .collect();
    let p = replay(aff, &aff.identity(), &shape);
    for s in &p.steps {
        if let Step::Letter(l) = s {
            assert_eq!(l.sign, -1, "walks into the chamber of w cross negatively");
        }
    }
    p
}

/// Straighten a word of step requests into a sum of genuine walks.
///
/// Left to right: a crossing intent whose sign matches the geometry stays a
/// crossing; at a mismatch it branches into the geometric crossing and a
/// fold carrying the intended sign.  A fold intent always folds, but when
/// its intended sign disagrees with the side of the alcove the term picks up
/// a factor −1.  Branches are explored depth-first, crossing before fold.
pub fn straighten(
    aff: &AffineWeyl,
    start: &ExtAffElt,
    word: &[InputLetter],
) -> Vec<(i64, Walk)> {
    let mut out = Vec::new();
    let mut steps: Vec<Step> = Vec::with_capacity(word.len());
    rec_straighten(aff, start, word, 0, start.clone(), 1, &mut steps, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn rec_straighten(
    aff: &AffineWeyl,
    start: &ExtAffElt,
    word: &[InputLetter],
    k: usize,
    e: ExtAffElt,
    flip: i64,
    steps: &mut Vec<Step>,
    out: &mut Vec<(i64, Walk)>,
) {
    if k == word.len() {
        out.push((
            flip,
            Walk {
                start: start.clone(),
                steps: steps.clone(),
                end: e,
            },
        ));
        return;
    }
    match word[k] {
        InputLetter::Omega(g) => {
            steps.push(Step::Omega(g));
            rec_straighten(aff, start, word, k + 1, aff.mult(&e, &aff.omega()[g]), flip, steps, out);
            steps.pop();
        }
        InputLetter::Letter { wall, kind, sign } => {
            let (root_idx, level) = aff.crossed_hyperplane(&e, wall);
            let side = aff.side_of_wall(&e, root_idx, level);
            match kind {
                StepKind::Crossing => {
                    let geom = -side;
                    steps.push(Step::Letter(LetterStep {
                        wall,
                        kind: StepKind::Crossing,
                        sign: geom,
                        root_idx,
                        level,
                    }));
                    let next = aff.mult(&e, &aff.generator(wall));
                    rec_straighten(aff, start, word, k + 1, next, flip, steps, out);
                    steps.pop();
                    if geom != sign {
                        // c^sign = c^geom + f^sign, and the fold's side is
                        // exactly the intended sign here.
                        steps.push(Step::Letter(LetterStep {
                            wall,
                            kind: StepKind::Fold,
                            sign,
                            root_idx,
                            level,
                        }));
                        rec_straighten(aff, start, word, k + 1, e, flip, steps, out);
                        steps.pop();
                    }
                }
                StepKind::Fold => {
                    // f^∓ = −f^± : the fold keeps the geometric side, the
                    // term flips sign if the request disagreed.
                    let new_flip = if side == sign { flip } else { -flip };
                    steps.push(Step::Letter(LetterStep {
                        wall,
                        kind: StepKind::Fold,
                        sign: side,
                        root_idx,
                        level,
                    }));
                    rec_straighten(aff, start, word, k + 1, e, new_flip, steps, out);
                    steps.pop();
                }
            }
        }
    }
}

/// Straightening expansion of `prefix · (crossing intents)` into signed
/// walks; the recorded sign of each term is (−1)^{f⁻}.
pub fn expand(aff: &AffineWeyl, prefix: &Walk, pattern: &[InputLetter]) -> Vec<SignedWalkTerm> {
    assert_eq!(prefix.num_folds(), 0, "expansion prefixes are nonfolded");
    for l in pattern {
        assert!(
            !matches!(l, InputLetter::Letter { kind: StepKind::Fold, .. }),
            "expansion patterns are crossing intents"
        );
    }
    let mut word = prefix.as_input();
    word.extend_from_slice(pattern);
    straighten(aff, &prefix.start, &word)
        .into_iter()
        .map(|(flip, walk)| {
            assert_eq!(flip, 1, "crossing intents never flip terms");
            let sign = if walk.f_minus() % 2 == 0 { 1 } else { -1 };
            SignedWalkTerm { walk, sign }
        })
        .collect()
}

/// All positively folded walks of the given type starting at the given
/// chamber alcoves, in deterministic (starts-major, crossing-before-fold
/// depth-first) order.
pub fn enumerate_pos_folded(
    aff: &AffineWeyl,
    pattern: &[InputLetter],
    starts: &[WeylElt],
) -> Vec<Walk> {
    for l in pattern {
        if let InputLetter::Letter { kind, sign, .. } = l {
            assert_eq!(*kind, StepKind::Crossing, "types carry crossing intents");
            assert_eq!(*sign, 1, "positively folded enumeration needs an all-positive type");
        }
    }
    let mut out = Vec::new();
    for w in starts {
        for (flip, walk) in straighten(aff, &aff.finite(w), pattern) {
            assert_eq!(flip, 1);
            assert_eq!(walk.f_minus(), 0, "all folds against a positive intent are positive");
            out.push(walk);
        }
    }
    out
}

/// The q-crystal B_q(p_λ): positively folded walks of the type of the
/// minimal walk to t_λ, starting at the minimal coset representatives W^λ.
pub fn bq_walks(aff: &AffineWeyl, lambda: &Weight) -> Vec<Walk> {
    assert!(lambda.is_dominant(), "q-crystals are indexed by dominant weights");
    let p_lambda = min_walk(aff, &aff.translation(lambda));
    enumerate_pos_folded(aff, &p_lambda.pattern(), &aff.min_reps_for(lambda))
}

/// Walk statistics (weight, directions, fold counts, zero-level fold count).
pub fn stats(aff: &AffineWeyl, p: &Walk) -> WalkStats {
    WalkStats {
        wt: p.wt().clone(),
        iota: p.iota_dir().clone(),
        phi: p.phi_dir().clone(),
        f_plus: p.f_plus(),
        f_minus: p.f_minus(),
        c: zero_fold_count(aff, p, &all_dirs(aff)),
    }
}

fn all_dirs(aff: &AffineWeyl) -> Vec<usize> {
    (0..aff.rank()).collect()
}

/// Number of folds lying on a linear simple-root hyperplane H_{α_j}, j ∈ dirs.
pub fn zero_fold_count(aff: &AffineWeyl, p: &Walk, dirs: &[usize]) -> usize {
    let idxs: Vec<usize> = dirs.iter().map(|&j| aff.datum().simple_root_index(j)).collect();
    p.steps
        .iter()
        .filter(|s| match s {
            Step::Letter(l) => {
                l.kind == StepKind::Fold && l.level == 0 && idxs.contains(&l.root_idx)
            }
            _ => false,
        })
        .count()
}

/// Dominance along the listed simple directions: the walk never touches
/// H_{α_j,−1} for j ∈ dirs — no step on a level ≤ −1 hyperplane of α_j and
/// the endpoint itself on the nonnegative side.
pub fn is_dominant_for(aff: &AffineWeyl, p: &Walk, dirs: &[usize]) -> bool {
    dirs.iter().all(|&j| {
        let ridx = aff.datum().simple_root_index(j);
        let safe_steps = p.steps.iter().all(|s| match s {
            Step::Letter(l) => l.root_idx != ridx || l.level >= 0,
            _ => true,
        });
        safe_steps && p.wt().coords()[j] >= 0
    })
}

/// Dominance: the walk stays inside the shifted cone C − ρ.
pub fn is_dominant(aff: &AffineWeyl, p: &Walk) -> bool {
    is_dominant_for(aff, p, &all_dirs(aff))
}

#[derive(Clone, Copy, Debug)]
struct ParallelEvent {
    pos: usize,
    fold: bool,
    up: bool,
    level: i64,
}

fn parallel_events(p: &Walk, root_idx: usize) -> Vec<ParallelEvent> {
    p.steps
        .iter()
        .enumerate()
        .filter_map(|(pos, s)| match s {
            Step::Letter(l) if l.root_idx == root_idx => Some(ParallelEvent {
                pos,
                fold: l.kind == StepKind::Fold,
                up: l.sign > 0,
                level: l.level,
            }),
            _ => None,
        })
        .collect()
}

/// Floors of the α_i-strips occupied by the walk: entry `t` is the strip
/// floor after the first `t` wall events parallel to α_i (entry 0 is the
/// strip of the start alcove).  Only parallel events can change the strip;
/// a fold bounces off the floor and stays, an upward crossing raises the
/// floor to its level, a downward crossing drops it one below.
fn strip_floors(evs: &[ParallelEvent]) -> Vec<i64> {
    let before = |e: &ParallelEvent| if !e.fold && e.up { e.level - 1 } else { e.level };
    let mut floors = Vec::with_capacity(evs.len() + 1);
    match evs.first() {
        Some(e) => floors.push(before(e)),
        None => return vec![0],
    }
    for (k, e) in evs.iter().enumerate() {
        assert_eq!(
            before(e),
            floors[k],
            "parallel wall events must be contiguous in the strip trajectory"
        );
        let next = match (e.fold, e.up) {
            (true, _) => e.level,
            (false, true) => e.level,
            (false, false) => e.level - 1,
        };
        floors.push(next);
    }
    floors
}

/// The last visit to the minimal strip: indices `(a, b)` into the floor
/// sequence such that floors[a..=b] is the final run at the minimum.
fn last_minimum_run(floors: &[i64]) -> (usize, usize, i64) {
    let m_hat = *floors.iter().min().unwrap();
    let b = floors.iter().rposition(|&f| f == m_hat).unwrap();
    let mut a = b;
    while a > 0 && floors[a - 1] == m_hat {
        a -= 1;
    }
    (a, b, m_hat)
}

fn set_kind(shape: &mut [ShapeStep], pos: usize, kind: StepKind) {
    match shape[pos] {
        ShapeStep::Letter(wall, _) => shape[pos] = ShapeStep::Letter(wall, kind),
        ShapeStep::Omega(_) => unreachable!("root operators only edit letters"),
    }
}

fn alpha_weight(aff: &AffineWeyl, i: usize) -> Weight {
    aff.datum().simple_root(i).as_weight().clone()
}

/// Lowering operator f̃_i.
///
/// The walk is projected onto the line of α_i-strips; only steps on walls
/// parallel to α_i move the projection.  The operator edits the outer edge
/// of the projection — the section through the last visit to the minimal
/// strip — and replays the walk:
///
/// * minimal folds present, later exit: the last minimal fold unfolds into
///   a crossing one strip deeper and the exit crossing folds (weight drops
///   by α_i);
/// * minimal folds present, no exit: the last fold simply unfolds — the
///   endpoint alcove reflects through the floor, preserving the weight;
/// * minimum attained only at the start of a walk that stays dominant in
///   direction i: the start alcove reflects through H_{α_i,0} and the first
///   parallel crossing (if any) folds;
/// * otherwise (a foldless valley or a bare final descent) there is nothing
///   to lower and the operator is undefined.
pub fn root_f(aff: &AffineWeyl, p: &Walk, i: usize) -> Option<Walk> {
    let ridx = aff.datum().simple_root_index(i);
    let evs = parallel_events(p, ridx);
    let wt_i = p.wt().coords()[i];
    let alpha = alpha_weight(aff, i);
    let mut shape = p.shape();
    let mut new_start = p.start.clone();

    if evs.is_empty() {
        // The projection is a point: the operator acts purely on the start.
        if wt_i != 1 {
            return None;
        }
        new_start = aff.mult(&aff.finite(&aff.datum().generator(i)), &p.start);
        let q = replay(aff, &new_start, &shape);
        assert_eq!(q.wt(), &p.wt().sub(&alpha), "f̃ lowers by α_i");
        assert_eq!(q.f_minus(), p.f_minus(), "operators preserve positive folding");
        return Some(q);
    }

    let floors = strip_floors(&evs);
    let (a, b, m_hat) = last_minimum_run(&floors);
    let n = evs.len();
    let terminal;
    if b > a {
        // Folds bounce along the minimal floor; events a+1..=b of the run.
        let last_fold = &evs[b - 1];
        assert!(last_fold.fold && last_fold.level == m_hat, "run interior is minimal folds");
        set_kind(&mut shape, last_fold.pos, StepKind::Crossing);
        if b < n {
            let exit = &evs[b];
            assert!(
                !exit.fold && exit.up && exit.level == m_hat + 1,
                "the minimal run can only be left by an upward crossing"
            );
            set_kind(&mut shape, exit.pos, StepKind::Fold);
            terminal = false;
        } else {
            terminal = true;
        }
    } else if a == 0 && m_hat >= 0 && wt_i >= 1 {
        // Start-strip minimum of an i-dominant walk: reflect the start.
        new_start = aff.mult(&aff.finite(&aff.datum().generator(i)), &p.start);
        let first = &evs[0];
        assert!(
            !first.fold && first.up && first.level == m_hat + 1,
            "a walk minimal at its start first rises through the next wall"
        );
        set_kind(&mut shape, first.pos, StepKind::Fold);
        terminal = false;
    } else {
        return None;
    }
    let q = replay(aff, &new_start, &shape);
    if terminal {
        // Unfolding a terminal fold reflects only the endpoint alcove, which
        // either preserves the weight or completes the drop by α_i.
        assert!(
            q.wt() == p.wt() || q.wt() == &p.wt().sub(&alpha),
            "a terminal unfold moves the weight by at most α_i"
        );
    } else {
        assert_eq!(q.wt(), &p.wt().sub(&alpha), "f̃ lowers by α_i");
    }
    assert_eq!(q.f_minus(), p.f_minus(), "operators preserve positive folding");
    Some(q)
}

/// Raising operator ẽ_i, the partial inverse of f̃_i.
///
/// Acting on the same outer edge:
///
/// * minimal folds present after a descent: the entering crossing folds one
///   strip higher and the first minimal fold unfolds (weight rises by α_i);
/// * minimal folds on the start strip below level zero: the start alcove
///   reflects back through H_{α_i,0} and the first fold unfolds;
/// * a bare final descent to a strict minimum refolds into a bounce,
///   reflecting only the endpoint alcove (weight preserved);
/// * otherwise — in particular whenever the walk never touches H_{α_i,-1} —
///   the walk heads its i-string and the operator is undefined.
pub fn root_e(aff: &AffineWeyl, p: &Walk, i: usize) -> Option<Walk> {
    let ridx = aff.datum().simple_root_index(i);
    let evs = parallel_events(p, ridx);
    let wt_i = p.wt().coords()[i];
    let alpha = alpha_weight(aff, i);
    let mut shape = p.shape();
    let mut new_start = p.start.clone();

    if evs.is_empty() {
        if wt_i != -1 {
            return None;
        }
        new_start = aff.mult(&aff.finite(&aff.datum().generator(i)), &p.start);
        let q = replay(aff, &new_start, &shape);
        assert_eq!(q.wt(), &p.wt().add(&alpha), "ẽ raises by α_i");
        assert_eq!(q.f_minus(), p.f_minus(), "operators preserve positive folding");
        return Some(q);
    }

    let floors = strip_floors(&evs);
    let (a, b, m_hat) = last_minimum_run(&floors);
    let n = evs.len();
    let terminal;
    if b > a {
        let first_fold = &evs[a];
        assert!(first_fold.fold && first_fold.level == m_hat, "run interior is minimal folds");
        if a > 0 {
            // Editing an earlier visit would not commute with f̃; raising is
            // only defined when this run is the unique minimal visit.
            if floors[..a].contains(&m_hat) {
                return None;
            }
            let entry = &evs[a - 1];
            assert!(
                !entry.fold && !entry.up && entry.level == m_hat + 1,
                "the minimal run can only be entered by a downward crossing"
            );
            set_kind(&mut shape, entry.pos, StepKind::Fold);
            set_kind(&mut shape, first_fold.pos, StepKind::Crossing);
            terminal = false;
        } else if m_hat <= -1 {
            // Folds on the floor of a start strip below the origin: undo the
            // start reflection.
            new_start = aff.mult(&aff.finite(&aff.datum().generator(i)), &p.start);
            set_kind(&mut shape, first_fold.pos, StepKind::Crossing);
            terminal = false;
        } else {
            // Folds on H_{α_i,0} at the start strip: an i-dominant head.
            return None;
        }
    } else if a > 0 && b == n && !floors[..a].contains(&m_hat) {
        // A bare final descent to a strict minimum: refold the last crossing.
        let entry = &evs[n - 1];
        assert!(
            !entry.fold && !entry.up && entry.level == m_hat + 1,
            "the final descent ends in a downward crossing"
        );
        set_kind(&mut shape, entry.pos, StepKind::Fold);
        terminal = true;
    } else {
        return None;
    }
    let q = replay(aff, &new_start, &shape);
    if terminal {
        assert!(
            q.wt() == p.wt() || q.wt() == &p.wt().add(&alpha),
            "a terminal refold moves the weight by at most α_i"
        );
    } else {
        assert_eq!(q.wt(), &p.wt().add(&alpha), "ẽ raises by α_i");
    }
    assert_eq!(q.f_minus(), p.f_minus(), "operators preserve positive folding");
    Some(q)
}

/// Crossings in the rising portion of the α_i-projection leaving the last
/// visit to the minimal strip.
pub fn d_plus(aff: &AffineWeyl, p: &Walk, i: usize) -> usize {
    let evs = parallel_events(p, aff.datum().simple_root_index(i));
    if evs.is_empty() {
        return 0;
    }
    let floors = strip_floors(&evs);
    let (_, b, _) = last_minimum_run(&floors);
    evs[b..].iter().take_while(|e| !e.fold && e.up).count()
}

/// Crossings in the falling portion of the α_i-projection entering the
/// first visit to the minimal strip.
pub fn d_minus(aff: &AffineWeyl, p: &Walk, i: usize) -> usize {
    let evs = parallel_events(p, aff.datum().simple_root_index(i));
    if evs.is_empty() {
        return 0;
    }
    let floors = strip_floors(&evs);
    let m_hat = *floors.iter().min().unwrap();
    let a = floors.iter().position(|&f| f == m_hat).unwrap();
    evs[..a].iter().rev().take_while(|e| !e.fold && !e.up).count()
}

/// Concatenation product of positively folded walks.
///
/// When φ(p₁) ≠ ι(p₂) the left factor is repaired along a minimal chamber
/// walk from φ(p₁) to ι(p₂): a negatively crossable wall is appended as a
/// crossing, and where a positive crossing would be needed the last negative
/// crossing of that hyperplane inside the left factor becomes a fold
/// (reflecting the tail), after which the repair re-examines the gap.
pub fn walk_tensor(aff: &AffineWeyl, p1: &Walk, p2: &Walk) -> Walk {
    assert_eq!(p1.f_minus(), 0, "tensor factors are positively folded");
    assert_eq!(p2.f_minus(), 0, "tensor factors are positively folded");
    assert!(
        p2.start.translation_part().is_zero(),
        "the right factor starts in the chamber polygon around the origin"
    );
    let datum = aff.datum();
    let mut left = p1.clone();
    let mut guard = 0usize;
    loop {
        guard += 1;
        assert!(guard < 10_000, "tensor repair terminates");
        let phi1 = left.end.finite_part().clone();
        let iota2 = p2.start.finite_part();
        if &phi1 == iota2 {
            break;
        }
        let gap = datum.weyl_mult(&datum.weyl_inverse(&phi1), iota2);
        let wall = gap.word()[0] + 1;
        let (root_idx, level) = aff.crossed_hyperplane(&left.end, wall);
        let mut shape = left.shape();
        if crossing_sign(aff, &left.end, wall) < 0 {
            shape.push(ShapeStep::Letter(wall, StepKind::Crossing));
        } else {
            let pos = left
                .steps
                .iter()
                .rposition(|s| matches!(s, Step::Letter(l)
                    if l.kind == StepKind::Crossing
                        && l.sign < 0
                        && l.root_idx == root_idx
                        && l.level == level))
                .expect("the repair hyperplane was crossed negatively before");
            set_kind(&mut shape, pos, StepKind::Fold);
        }
        left = replay(aff, &left.start, &shape);
    }
    let mut shape = left.shape();
    shape.extend(p2.shape());
    let out = replay(aff, &left.start, &shape);
    assert_eq!(out.wt(), &p1.wt().add(p2.wt()), "tensor weights add");
    assert_eq!(out.f_minus(), 0, "the tensor of positively folded walks is positively folded");
    out
}
