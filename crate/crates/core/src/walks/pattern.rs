use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::WalkError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Step {
    /// Edge traversed along its orientation.
    F,
    /// Edge traversed against its orientation.
    B,
}

impl Step {
    pub fn flipped(self) -> Step {
        match self {
            Step::F => Step::B,
            Step::B => Step::F,
        }
    }
}

/// An orientation of a cycle, read as a cyclic word over `{f, b}`. Letter `i`
/// joins positions `i` and `i + 1 (mod ℓ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct CyclePattern {
    steps: Vec<Step>,
}

impl CyclePattern {
    pub fn new(steps: Vec<Step>) -> Result<Self, WalkError> {
        if steps.len() < 3 {
            return Err(WalkError::PatternTooShort(steps.len()));
        }
        Ok(CyclePattern { steps })
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

    pub fn forward_count(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::F).count()
    }

    pub fn backward_count(&self) -> usize {
        self.len() - self.forward_count()
    }

    /// The same cycle traversed the other way round.
    pub fn reversed(&self) -> CyclePattern {
        CyclePattern { steps: self.steps.iter().rev().map(|s| s.flipped()).collect() }
    }

    /// The same cycle read from position `k`.
    pub fn rotated(&self, k: usize) -> CyclePattern {
        let mut steps = self.steps.clone();
        steps.rotate_left(k % self.len());
        CyclePattern { steps }
    }

    fn occurrences(&self, word: &[Step]) -> Vec<usize> {
        let l = self.len();
        (0..l)
            .filter(|&s| word.iter().enumerate().all(|(j, &w)| self.steps[(s + j) % l] == w))
            .collect()
    }
}

impl FromStr for CyclePattern {
    type Err = WalkError;

    fn from_str(s: &str) -> Result<Self, WalkError> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'f' | 'F' => Ok(Step::F),
                'b' | 'B' => Ok(Step::B),
                other => Err(WalkError::BadLetter(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        CyclePattern::new(steps)
    }
}

impl TryFrom<String> for CyclePattern {
    type Error = WalkError;

    fn try_from(s: String) -> Result<Self, WalkError> {
        s.parse()
    }
}

impl From<CyclePattern> for String {
    fn from(p: CyclePattern) -> String {
        p.to_string()
    }
}

impl fmt::Display for CyclePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::F => "f",
                Step::B => "b",
            })?;
        }
        Ok(())
    }
}

/// `|#f − #b|`.
pub fn cycle_type(p: &CyclePattern) -> usize {
    p.forward_count().abs_diff(p.backward_count())
}

/// Least `k ≥ 3` that does not divide `ell`.
///
/// # Panics
/// If `ell == 0`, which every `k` divides.
pub fn smallest_nondivisor(ell: usize) -> usize {
    assert!(ell > 0, "every integer divides 0");
    (3..).find(|k| ell % k != 0).unwrap()
}

pub fn is_prime_power(k: usize) -> bool {
    if k < 2 {
        return false;
    }
    let p = (2..).find(|p| k % p == 0).unwrap();
    let mut m = k;
    while m % p == 0 {
        m /= p;
    }
    m == 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShapeKind {
    DirectedPath,
    DirectedCycle,
    PathWithTransitiveTriangle,
    PathWithTwoTriangles,
    PathWithFffbSquare,
}

/// Extra vertices hung off spine vertex `at` (call it `x`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Gadget {
    /// Edges `x → z`, `z → y`, `x → y`.
    Triangle { at: usize, z: usize, y: usize },
    /// Edges `x → y`, `y → z`, `z → y2`, `x → y2`.
    Square { at: usize, y: usize, z: usize, y2: usize },
}

impl Gadget {
    pub fn at(&self) -> usize {
        match *self {
            Gadget::Triangle { at, .. } | Gadget::Square { at, .. } => at,
        }
    }
}

/// Target walk for a cycle pattern.
///
/// Path shapes use vertices `0..=k2` for the spine `0 → 1 → … → k2` and
/// number gadget vertices after it. The cycle shape is `0 → 1 → … → k−1 → 0`.
/// `homomorphism[i]` is the image of pattern position `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkShape {
    pub kind: ShapeKind,
    pub k2: usize,
    pub k: Option<usize>,
    pub gadgets: Vec<Gadget>,
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub homomorphism: Vec<usize>,
}

impl WalkShape {
    /// Spine index of the first gadget.
    pub fn k1(&self) -> Option<usize> {
        self.gadgets.first().map(Gadget::at)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u, v))
    }

    /// Whether `homomorphism` sends every letter of `p` to a shape edge of
    /// the right direction.
    pub fn is_homomorphism_of(&self, p: &CyclePattern) -> bool {
        let l = p.len();
        self.homomorphism.len() == l
            && p.steps().iter().enumerate().all(|(i, s)| {
                let (u, v) = (self.homomorphism[i], self.homomorphism[(i + 1) % l]);
                match s {
                    Step::F => self.has_edge(u, v),
                    Step::B => self.has_edge(v, u),
                }
            })
    }
}

/// Shape for `p`: a directed path when the type is 0, a directed `t`-cycle
/// for type `t ≥ 3`, and a directed path carrying transitive triangles or an
/// `fffb` square for types 1 and 2. Patterns with more `b` than `f` are
/// handled through their reversal.
pub fn pattern_to_walk(p: &CyclePattern) -> WalkShape {
    if p.forward_count() >= p.backward_count() {
        return forward_shape(p);
    }
    let mut shape = forward_shape(&p.reversed());
    let l = p.len();
    let hom = shape.homomorphism.clone();
    shape.homomorphism = (0..l).map(|i| hom[(l - i) % l]).collect();
    shape
}

fn forward_shape(p: &CyclePattern) -> WalkShape {
    const FFB: [Step; 3] = [Step::F, Step::F, Step::B];
    const FFFB: [Step; 4] = [Step::F, Step::F, Step::F, Step::B];
    let t = cycle_type(p);
    match t {
        0 => collapse(p, &[], ShapeKind::DirectedPath),
        1 => {
            let s = p.occurrences(&FFB)[0];
            collapse(p, &[(s, 3)], ShapeKind::PathWithTransitiveTriangle)
        }
        2 => {
            let ffb = p.occurrences(&FFB);
            if ffb.len() >= 2 {
                collapse(p, &[(ffb[0], 3), (ffb[1], 3)], ShapeKind::PathWithTwoTriangles)
            } else {
                let s = p.occurrences(&FFFB)[0];
                collapse(p, &[(s, 4)], ShapeKind::PathWithFffbSquare)
            }
        }
        _ => cycle_shape(p, t),
    }
}

fn cycle_shape(p: &CyclePattern, t: usize) -> WalkShape {
    let mut h = 0usize;
    let mut hom = Vec::with_capacity(p.len());
    for s in p.steps() {
        hom.push(h);
        h = match s {
            Step::F => (h + 1) % t,
            Step::B => (h + t - 1) % t,
        };
    }
    debug_assert_eq!(h, 0);
    WalkShape {
        kind: ShapeKind::DirectedCycle,
        k2: 0,
        k: Some(t),
        gadgets: Vec::new(),
        vertex_count: t,
        edges: (0..t).map(|i| (i, (i + 1) % t)).collect(),
        homomorphism: hom,
    }
}

enum Slot {
    Spine(i64),
    Gadget(usize, usize),
}

/// Walks the pattern from the first gadget start. Each gadget (`ffb` of
/// width 3, `fffb` of width 4) returns to the height it started at; every
/// other letter moves the height by ±1. Heights become spine positions.
fn collapse(p: &CyclePattern, gadgets: &[(usize, usize)], kind: ShapeKind) -> WalkShape {
    let l = p.len();
    let steps = p.steps();
    let s0 = gadgets.first().map_or(0, |g| g.0);
    let mut slots: Vec<Option<Slot>> = (0..l).map(|_| None).collect();
    let mut starts: Vec<(usize, i64)> = Vec::new();
    let mut h: i64 = 0;
    let mut i = 0;
    while i < l {
        let pos = (s0 + i) % l;
        slots[pos] = Some(Slot::Spine(h));
        if let Some(j) = gadgets.iter().position(|g| g.0 == pos) {
            let width = gadgets[j].1;
            for k in 1..width {
                slots[(pos + k) % l] = Some(Slot::Gadget(j, k));
            }
            starts.push((j, h));
            i += width;
        } else {
            h += match steps[pos] {
                Step::F => 1,
                Step::B => -1,
            };
            i += 1;
        }
    }
    debug_assert_eq!(h, 0);
    let heights = slots.iter().filter_map(|s| match s {
        Some(Slot::Spine(h)) => Some(*h),
        _ => None,
    });
    let lo = heights.clone().min().unwrap_or(0);
    let hi = heights.max().unwrap_or(0);
    let k2 = (hi - lo) as usize;

    let mut edges: Vec<(usize, usize)> = (0..k2).map(|i| (i, i + 1)).collect();
    let mut next = k2 + 1;
    let mut built = Vec::new();
    let mut gadget_vertices: Vec<Vec<usize>> = vec![Vec::new(); gadgets.len()];
    starts.sort_unstable();
    for &(j, start_h) in &starts {
        let at = (start_h - lo) as usize;
        let width = gadgets[j].1;
        let verts: Vec<usize> = (next..next + width - 1).collect();
        next += width - 1;
        let gadget = if width == 3 {
            let (z, y) = (verts[0], verts[1]);
            edges.extend([(at, z), (z, y), (at, y)]);
            Gadget::Triangle { at, z, y }
        } else {
            let (y, z, y2) = (verts[0], verts[1], verts[2]);
            edges.extend([(at, y), (y, z), (z, y2), (at, y2)]);
            Gadget::Square { at, y, z, y2 }
        };
        gadget_vertices[j] = verts;
        built.push(gadget);
    }
    let homomorphism = slots
        .iter()
        .map(|s| match s.as_ref().expect("every position visited") {
            Slot::Spine(h) => (h - lo) as usize,
            Slot::Gadget(j, k) => gadget_vertices[*j][k - 1],
        })
        .collect();
    WalkShape { kind, k2, k: None, gadgets: built, vertex_count: next, edges, homomorphism }
}
