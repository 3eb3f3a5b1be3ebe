//! Complete stacky fans in ℝ² and the surgery that turns the GIT fan into
//! the KSBA fan.
//!
//! Ray generators are kept exactly as given, non-primitive ones included.
//! A cone is stored as the ordered pair `(a, b)` of its generators with
//! `a × b > 0`, i.e. counterclockwise from `a` to `b`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};

pub type Ray = [i64; 2];

fn cross(u: Ray, v: Ray) -> i64 {
    u[0] * v[1] - u[1] * v[0]
}

fn dot(u: Ray, v: Ray) -> i64 {
    u[0] * v[0] + u[1] * v[1]
}

/// Same direction: positive multiples of each other.
fn same_direction(u: Ray, v: Ray) -> bool {
    cross(u, v) == 0 && dot(u, v) > 0
}

/// Total order on directions by angle in `[0, 2π)`, no trigonometry.
fn angle_cmp(u: Ray, v: Ray) -> Ordering {
    let half = |w: Ray| if w[1] > 0 || (w[1] == 0 && w[0] > 0) { 0 } else { 1 };
    half(u).cmp(&half(v)).then_with(|| 0.cmp(&cross(u, v)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cone {
    pub rays: [Ray; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl Cone {
    fn new(a: Ray, b: Ray) -> Self {
        Cone { rays: [a, b], label: None }
    }

    fn labeled(a: Ray, b: Ray, label: &str) -> Self {
        Cone { rays: [a, b], label: Some(label.to_string()) }
    }

    /// `v = s·a + t·b` with `s, t` rational.
    pub fn coordinates(&self, v: Ray) -> (BigRational, BigRational) {
        let [a, b] = self.rays;
        let det = BigInt::from(cross(a, b));
        let s = BigRational::new(BigInt::from(cross(v, b)), det.clone());
        let t = BigRational::new(BigInt::from(cross(a, v)), det);
        (s, t)
    }

    fn contains_in_interior(&self, v: Ray) -> bool {
        let [a, b] = self.rays;
        cross(a, v) > 0 && cross(v, b) > 0
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = self.rays;
        if let Some(l) = &self.label {
            write!(f, "{l} = ")?;
        }
        write!(f, "(({}, {}), ({}, {}))", a[0], a[1], b[0], b[1])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StackyFan {
    rays: Vec<Ray>,
    cones: Vec<Cone>,
}

impl StackyFan {
    /// Checks that rays are nonzero and pairwise non-parallel in the same
    /// direction, that every cone is strictly convex, oriented, built from
    /// listed rays, and that cone interiors are disjoint.
    pub fn new(rays: Vec<Ray>, cones: Vec<Cone>) -> Result<Self> {
        for (i, &r) in rays.iter().enumerate() {
            if r == [0, 0] {
                return Err(Error::InvalidFan("zero ray".into()));
            }
            if rays[..i].iter().any(|&s| same_direction(r, s)) {
                return Err(Error::InvalidFan(format!("ray {r:?} repeats a direction")));
            }
        }
        for c in &cones {
            let [a, b] = c.rays;
            if !rays.contains(&a) || !rays.contains(&b) {
                return Err(Error::InvalidFan(format!("cone {c} uses an unlisted ray")));
            }
            if cross(a, b) <= 0 {
                return Err(Error::InvalidFan(format!("cone {c} is not strictly convex")));
            }
        }
        for (i, c) in cones.iter().enumerate() {
            for d in &cones[..i] {
                let overlap = same_direction(c.rays[0], d.rays[0])
                    || c.contains_in_interior(d.rays[0])
                    || d.contains_in_interior(c.rays[0]);
                if overlap {
                    return Err(Error::InvalidFan(format!("cones {c} and {d} overlap")));
                }
            }
        }
        Ok(StackyFan { rays, cones })
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn cone(&self, a: Ray, b: Ray) -> Option<&Cone> {
        self.cones.iter().find(|c| c.rays == [a, b])
    }

    pub fn cone_labeled(&self, label: &str) -> Option<&Cone> {
        self.cones.iter().find(|c| c.label.as_deref() == Some(label))
    }

    /// Attaches `label` to the cone `(a, b)`.
    pub fn label_cone(mut self, a: Ray, b: Ray, label: &str) -> Result<Self> {
        let cone = self
            .cones
            .iter_mut()
            .find(|c| c.rays == [a, b])
            .ok_or_else(|| Error::InvalidFan(format!("no cone ({a:?}, {b:?})")))?;
        cone.label = Some(label.to_string());
        Ok(self)
    }

    /// Rays sorted by angle.
    pub fn sorted_rays(&self) -> Vec<Ray> {
        let mut r = self.rays.clone();
        r.sort_by(|&u, &v| angle_cmp(u, v));
        r
    }

    /// Cones cover the plane: consecutive rays by angle bound exactly one
    /// cone each, and no other cones exist.
    pub fn is_complete(&self) -> bool {
        let sorted = self.sorted_rays();
        let n = sorted.len();
        if n < 3 || self.cones.len() != n {
            return false;
        }
        (0..n).all(|i| {
            let (a, b) = (sorted[i], sorted[(i + 1) % n]);
            cross(a, b) > 0 && self.cones.iter().filter(|c| c.rays == [a, b]).count() == 1
        })
    }

    /// The cone whose closure contains `v`, with `v`'s coordinates in its
    /// generators.
    pub fn locate(&self, v: Ray) -> Option<(&Cone, BigRational, BigRational)> {
        self.cones.iter().find_map(|c| {
            let [a, b] = c.rays;
            (cross(a, v) >= 0 && cross(v, b) >= 0 && v != [0, 0]).then(|| {
                let (s, t) = c.coordinates(v);
                (c, s, t)
            })
        })
    }

    /// Star subdivision at `v`: the unique cone containing `v` in its
    /// interior is split in two. Split cones lose their label.
    pub fn insert_ray(&self, v: Ray) -> Result<StackyFan> {
        if v == [0, 0] {
            return Err(Error::RayOutsideSupport("zero vector".into()));
        }
        if let Some(r) = self.rays.iter().find(|&&r| same_direction(r, v)) {
            return Err(Error::RayOnExistingRay(format!("{v:?} lies on {r:?}")));
        }
        let i = self
            .cones
            .iter()
            .position(|c| c.contains_in_interior(v))
            .ok_or_else(|| Error::RayOutsideSupport(format!("{v:?}")))?;
        let [a, b] = self.cones[i].rays;
        let mut cones = self.cones.clone();
        cones.splice(i..=i, [Cone::new(a, v), Cone::new(v, b)]);
        let mut rays = self.rays.clone();
        rays.push(v);
        StackyFan::new(rays, cones)
    }

    /// Removes the ray `v` and merges its two adjacent cones.
    pub fn collapse_ray(&self, v: Ray) -> Result<StackyFan> {
        if !self.rays.contains(&v) {
            return Err(Error::RayNotFound(format!("{v:?}")));
        }
        let before: Vec<usize> = (0..self.cones.len()).filter(|&i| self.cones[i].rays[1] == v).collect();
        let after: Vec<usize> = (0..self.cones.len()).filter(|&i| self.cones[i].rays[0] == v).collect();
        let (&[i], &[j]) = (before.as_slice(), after.as_slice()) else {
            return Err(Error::MergeNotConvex(format!("{v:?} is not adjacent to exactly two cones")));
        };
        let (a, b) = (self.cones[i].rays[0], self.cones[j].rays[1]);
        if cross(a, b) <= 0 {
            return Err(Error::MergeNotConvex(format!(
                "merging across {v:?} gives ({a:?}, {b:?}), which is not strictly convex"
            )));
        }
        let mut cones: Vec<Cone> = self
            .cones
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i && k != j)
            .map(|(_, c)| c.clone())
            .collect();
        cones.insert(i.min(j), Cone::new(a, b));
        let rays = self.rays.iter().copied().filter(|&r| r != v).collect();
        StackyFan::new(rays, cones)
    }
}

/// The GIT fan with rays `(2,0)`, `(0,1)`, `(−2,−1)`.
pub fn initial_git_fan() -> StackyFan {
    let (e, f, g) = ([2, 0], [0, 1], [-2, -1]);
    StackyFan::new(
        vec![e, f, g],
        vec![Cone::labeled(f, g, "O"), Cone::labeled(e, f, "II"), Cone::labeled(g, e, "III")],
    )
    .expect("valid fan")
}

/// Intermediate fans and the final fan of the surgery.
#[derive(Clone, Debug, Serialize)]
pub struct FanSurgery {
    pub initial: StackyFan,
    pub after_first_insertion: StackyFan,
    pub after_second_insertion: StackyFan,
    pub result: StackyFan,
}

/// Insert `(4,−1)`, insert `(2,1)`, collapse `(2,0)`.
pub fn ksba_surgery() -> FanSurgery {
    let (e, f, g) = ([2, 0], [0, 1], [-2, -1]);
    let (u, w) = ([4, -1], [2, 1]);
    let build = || -> Result<FanSurgery> {
        let initial = initial_git_fan();
        let first = initial
            .insert_ray(u)?
            .label_cone(g, u, "III")?
            .label_cone(u, e, "IV'")?;
        let second = first
            .insert_ray(w)?
            .label_cone(e, w, "IV''")?
            .label_cone(w, f, "II")?;
        let result = second.collapse_ray(e)?.label_cone(u, w, "IV")?;
        Ok(FanSurgery { initial, after_first_insertion: first, after_second_insertion: second, result })
    };
    build().expect("surgery on the GIT fan succeeds")
}

pub fn ksba_fan() -> StackyFan {
    ksba_surgery().result
}
