//! Lower convex hulls of finite point sets in the plane.

use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{Int, Rat};

/// A side of a polygon, from `start` to `end` (abscissae increasing).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub start: (usize, Rat),
    pub end: (usize, Rat),
}

impl Edge {
    pub fn length(&self) -> usize {
        self.end.0 - self.start.0
    }

    pub fn slope(&self) -> Rat {
        (&self.end.1 - &self.start.1) / Rat::from_integer(Int::from(self.length()))
    }

    /// `(ℓ, e)` with slope `−ℓ/e`, `gcd(ℓ, e) = 1`, `e > 0`.
    pub fn ell_e(&self) -> (Int, u64) {
        let s = -self.slope();
        let e = s.denom().to_u64().expect("edge denominators are small");
        (s.numer().clone(), e)
    }

    /// The smallest `e > 0` with `e·slope ∈ Z`.
    pub fn ramification(&self) -> u64 {
        self.ell_e().1
    }

    /// `length / e`: number of lattice segments along the edge.
    pub fn degree(&self) -> usize {
        self.length() / self.ramification() as usize
    }

    /// Exact ordinate at abscissa `x` inside the projection of the edge.
    pub fn ordinate_at(&self, x: usize) -> Rat {
        let dx = Rat::from_integer(Int::from(x - self.start.0));
        &self.start.1 + self.slope() * dx
    }
}

/// Lower convex hull of a finite support. Interior collinear points are not
/// vertices but remain available through [`NewtonPolygon::points`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    points: Vec<(usize, Rat)>,
    vertices: Vec<(usize, Rat)>,
}

fn cross(o: &(usize, Rat), a: &(usize, Rat), b: &(usize, Rat)) -> Rat {
    let ax = Rat::from_integer(Int::from(a.0) - Int::from(o.0));
    let bx = Rat::from_integer(Int::from(b.0) - Int::from(o.0));
    ax * (&b.1 - &o.1) - (&a.1 - &o.1) * bx
}

impl NewtonPolygon {
    /// Hull of the given points. For repeated abscissae the lowest ordinate
    /// is kept.
    pub fn from_points(pts: impl IntoIterator<Item = (usize, Rat)>) -> Self {
        let mut points: Vec<(usize, Rat)> = Vec::new();
        let mut sorted: Vec<(usize, Rat)> = pts.into_iter().collect();
        sorted.sort();
        for p in sorted {
            match points.last() {
                Some(last) if last.0 == p.0 => {}
                _ => points.push(p),
            }
        }
        let mut vertices: Vec<(usize, Rat)> = Vec::new();
        for p in &points {
            while vertices.len() >= 2
                && !cross(&vertices[vertices.len() - 2], &vertices[vertices.len() - 1], p).is_positive()
            {
                vertices.pop();
            }
            vertices.push(p.clone());
        }
        NewtonPolygon { points, vertices }
    }

    /// Newton polygon of `Σ c_i x^i` from coefficient valuations
    /// (`None` = zero coefficient).
    pub fn from_valuations(vals: &[Option<Int>]) -> Self {
        NewtonPolygon::from_points(
            vals.iter()
                .enumerate()
                .filter_map(|(i, v)| v.as_ref().map(|v| (i, Rat::from_integer(v.clone())))),
        )
    }

    pub fn points(&self) -> &[(usize, Rat)] {
        &self.points
    }

    pub fn vertices(&self) -> &[(usize, Rat)] {
        &self.vertices
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.vertices
            .windows(2)
            .map(|w| Edge {
                start: w[0].clone(),
                end: w[1].clone(),
            })
            .collect()
    }

    /// The part made of edges with negative slope.
    pub fn principal(&self) -> NewtonPolygon {
        let mut vertices = vec![];
        if let Some(first) = self.vertices.first() {
            vertices.push(first.clone());
            for e in self.edges() {
                if !e.slope().is_negative() {
                    break;
                }
                vertices.push(e.end.clone());
            }
        }
        let last_x = vertices.last().map_or(0, |v| v.0);
        let points = self.points.iter().filter(|p| p.0 <= last_x).cloned().collect();
        NewtonPolygon { points, vertices }
    }

    pub fn first_abscissa(&self) -> Option<usize> {
        self.vertices.first().map(|v| v.0)
    }

    pub fn last_vertex(&self) -> Option<&(usize, Rat)> {
        self.vertices.last()
    }

    /// Ordinate over abscissa `x`, interpolated along the containing edge.
    pub fn ordinate_at(&self, x: usize) -> Option<Rat> {
        let first = self.vertices.first()?;
        if x == first.0 {
            return Some(first.1.clone());
        }
        self.edges()
            .into_iter()
            .find(|e| e.start.0 < x && x <= e.end.0)
            .map(|e| e.ordinate_at(x))
    }

    /// Whether the support point at `x` lies on the polygon.
    pub fn point_on(&self, x: usize) -> Option<&Rat> {
        let p = self.points.iter().find(|p| p.0 == x)?;
        (self.ordinate_at(x)? == p.1).then_some(&p.1)
    }

    /// Points with positive integer coordinates on or below the polygon,
    /// taken over its whole projection.
    pub fn lattice_points_below(&self) -> u64 {
        let (Some(first), Some(last)) = (self.vertices.first(), self.vertices.last()) else {
            return 0;
        };
        (first.0.max(1)..=last.0)
            .map(|x| {
                let y = self.ordinate_at(x).expect("inside projection");
                y.floor().to_integer().max(Int::zero()).to_u64().expect("small count")
            })
            .sum()
    }

    /// Slopes strictly increase from left to right.
    pub fn is_convex(&self) -> bool {
        self.edges().windows(2).all(|w| w[0].slope() < w[1].slope())
    }
}
