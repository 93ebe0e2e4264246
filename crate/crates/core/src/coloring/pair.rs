use crate::combin::{choose2, pair_rank};
use crate::{Error, Result, Vertex};

/// How color identifiers are interpreted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Palette {
    /// Colors are `0..size`.
    Indexed { size: u32 },
    /// Color `id` is the pair `(id / a, id % a)`: a level in `0..ell` and a
    /// residue in `0..a`.
    Rainbow { ell: u32, a: u32 },
}

impl Palette {
    pub fn size(&self) -> u32 {
        match *self {
            Palette::Indexed { size } => size,
            Palette::Rainbow { ell, a } => ell * a,
        }
    }
}

/// A color for every unordered pair of `0..n`, stored by colex pair rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairColoring {
    n: u32,
    palette: Palette,
    colors: Vec<u32>,
}

impl PairColoring {
    pub fn new(n: u32, palette: Palette, colors: Vec<u32>) -> Result<Self> {
        if colors.len() as u64 != choose2(n as u64) {
            return Err(Error::invalid(format!(
                "{} colors given for {} pairs",
                colors.len(),
                choose2(n as u64)
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= palette.size()) {
            return Err(Error::invalid(format!(
                "color {c} outside palette of size {}",
                palette.size()
            )));
        }
        Ok(PairColoring { n, palette, colors })
    }

    /// Every pair gets color 0 from a palette of `size` colors.
    pub fn monochromatic(n: u32, size: u32) -> Self {
        PairColoring {
            n,
            palette: Palette::Indexed { size },
            colors: vec![0; choose2(n as u64) as usize],
        }
    }

    pub fn num_vertices(&self) -> u32 {
        self.n
    }

    pub fn palette(&self) -> Palette {
        self.palette
    }

    #[inline]
    pub fn color(&self, u: Vertex, v: Vertex) -> u32 {
        self.colors[pair_rank(u, v)]
    }

    pub fn set_color(&mut self, u: Vertex, v: Vertex, c: u32) {
        assert!(c < self.palette.size());
        self.colors[pair_rank(u, v)] = c;
    }

    /// Colors by colex pair rank.
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// `(level, residue)` of a color under a rainbow palette.
    pub fn rainbow_parts(&self, color: u32) -> Option<(u32, u32)> {
        match self.palette {
            Palette::Rainbow { a, .. } => Some((color / a, color % a)),
            Palette::Indexed { .. } => None,
        }
    }

    /// True iff the triangle `uvw` gets three distinct colors.
    #[inline]
    pub fn is_rainbow(&self, u: Vertex, v: Vertex, w: Vertex) -> bool {
        let (a, b, c) = (self.color(u, v), self.color(v, w), self.color(u, w));
        a != b && b != c && a != c
    }
}
