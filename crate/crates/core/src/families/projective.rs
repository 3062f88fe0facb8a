use serde::Serialize;

use crate::error::{Error, Result};

/// The plane `π(n)` over integers mod a prime `n`. Points are numbered
/// `1..=n²+n+1`; `lines[i]` lists the points of line `i + 1` in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectivePlane {
    order: u32,
    lines: Vec<Vec<usize>>,
}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

// Normalised homogeneous coordinates: (1,a,b), then (0,1,b), then (0,0,1).
fn coordinates(n: u64) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            out.push([1, a, b]);
        }
    }
    for b in 0..n {
        out.push([0, 1, b]);
    }
    out.push([0, 0, 1]);
    out
}

pub fn projective_plane(n: u32) -> Result<ProjectivePlane> {
    if !is_prime(n) {
        return Err(Error::UnsupportedOrder(n));
    }
    let coords = coordinates(n as u64);
    let lines = coords
        .iter()
        .map(|l| {
            coords
                .iter()
                .enumerate()
                .filter(|(_, p)| (l[0] * p[0] + l[1] * p[1] + l[2] * p[2]) % n as u64 == 0)
                .map(|(i, _)| i + 1)
                .collect()
        })
        .collect();
    Ok(ProjectivePlane { order: n, lines })
}

impl ProjectivePlane {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn point_count(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn incident(&self, point: usize, line: usize) -> bool {
        self.lines[line].binary_search(&point).is_ok()
    }

    /// Checks the four incidence axioms exhaustively.
    pub fn check_axioms(&self) -> bool {
        let n = self.order as usize;
        let count = self.point_count();
        let sizes_ok = count == n * n + n + 1 && self.lines.iter().all(|l| l.len() == n + 1);
        let per_point =
            (1..=count).all(|p| self.lines.iter().filter(|l| l.binary_search(&p).is_ok()).count() == n + 1);
        let lines_meet = (0..count).all(|i| {
            (i + 1..count).all(|j| self.lines[i].iter().filter(|p| self.lines[j].binary_search(p).is_ok()).count() == 1)
        });
        let points_join = (1..=count).all(|p| {
            (p + 1..=count).all(|q| self.lines.iter().filter(|l| l.binary_search(&p).is_ok() && l.binary_search(&q).is_ok()).count() == 1)
        });
        sizes_ok && per_point && lines_meet && points_join
    }
}
