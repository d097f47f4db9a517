//! Vertex colorings with colors `1..=r` and the one-line file format.

use crate::error::{Error, Result};

/// A vertex coloring using colors `1..=r`. It need not be proper and need not
/// be exact (surjective); exactness is queried with [`Coloring::is_exact`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Coloring {
    colors: Vec<u32>,
    r: u32,
}

impl Coloring {
    /// Validates that every color lies in `1..=r`.
    pub fn new(colors: Vec<u32>, r: u32) -> Result<Self> {
        for (v, &c) in colors.iter().enumerate() {
            if c == 0 || c > r {
                return Err(Error::InvalidColoring(format!(
                    "vertex {v} has color {c}, outside 1..={r}"
                )));
            }
        }
        Ok(Self { colors, r })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Bitmask of used colors: bit `c-1` set when color `c` appears.
    pub fn used_mask(&self) -> u64 {
        self.colors.iter().fold(0u64, |m, &c| m | 1 << (c - 1))
    }

    /// True when all of `1..=r` appear.
    pub fn is_exact(&self) -> bool {
        let full = if self.r == 0 { 0 } else { (1u64 << self.r) - 1 };
        self.used_mask() == full
    }

    /// Color classes: `classes()[c-1]` lists the vertices of color `c`, ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.r as usize];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c as usize - 1].push(v);
        }
        out
    }

    /// Merges color `absorb` into color `keep` and renumbers the colors above
    /// `absorb` down so the result uses `1..=r-1`. Exactness is preserved.
    pub fn merge_colors(&self, keep: u32, absorb: u32) -> Result<Coloring> {
        if keep == absorb || keep == 0 || absorb == 0 || keep > self.r || absorb > self.r {
            return Err(Error::InvalidColoring(format!(
                "cannot merge color {absorb} into {keep} with r={}",
                self.r
            )));
        }
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                let c = if c == absorb { keep } else { c };
                if c > absorb {
                    c - 1
                } else {
                    c
                }
            })
            .collect();
        Coloring::new(colors, self.r - 1)
    }

    /// Renumbers colors by first occurrence, so the first vertex has color 1,
    /// the next new color is 2, and so on. Used colors stay `1..=r`.
    pub fn canonical(&self) -> Coloring {
        let mut map = vec![0u32; self.r as usize + 1];
        let mut next = 0u32;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if map[c as usize] == 0 {
                    next += 1;
                    map[c as usize] = next;
                }
                map[c as usize]
            })
            .collect();
        Coloring { colors, r: self.r }
    }

    /// Parses the one-line format: space-separated colors by vertex index,
    /// 1-based. `r` is the largest color present.
    pub fn parse_line(line: &str) -> Result<Self> {
        let mut colors = Vec::new();
        for tok in line.split_whitespace() {
            let c: u32 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad color token '{tok}'")))?;
            if c == 0 {
                return Err(Error::Parse("colors are 1-based; found 0".into()));
            }
            colors.push(c);
        }
        if colors.is_empty() {
            return Err(Error::Parse("empty coloring line".into()));
        }
        let r = *colors.iter().max().expect("nonempty");
        Coloring::new(colors, r)
    }

    pub fn to_line(&self) -> String {
        self.colors
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}
