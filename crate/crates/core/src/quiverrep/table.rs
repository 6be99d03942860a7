use std::fmt::Write as _;

use rayon::prelude::*;

use super::{hom_ext_dims, Representation};
use crate::exactlin::Field;
use crate::rootsys::{Root, RootSystem};

/// `[β,γ] = dim Hom(M_β, M_γ)` and `[β,γ]¹ = dim Ext¹(M_β, M_γ)` over all
/// pairs of indecomposables, indexed by word position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomTable {
    hom: Vec<Vec<u32>>,
    ext: Vec<Vec<u32>>,
}

impl HomTable {
    /// `reps[k]` must be the indecomposable of the `k`-th root.
    pub fn build<F: Field>(rs: &RootSystem, reps: &[Representation<F>]) -> Self {
        let q = rs.quiver();
        let rows: Vec<(Vec<u32>, Vec<u32>)> = reps
            .par_iter()
            .map(|m| {
                reps.iter()
                    .map(|n| {
                        let (h, e) = hom_ext_dims(q, m, n);
                        (h as u32, e as u32)
                    })
                    .unzip()
            })
            .collect();
        let (hom, ext) = rows.into_iter().unzip();
        HomTable { hom, ext }
    }

    pub fn hom(&self, a: Root, b: Root) -> u32 {
        self.hom[a.0][b.0]
    }

    pub fn ext(&self, a: Root, b: Root) -> u32 {
        self.ext[a.0][b.0]
    }

    /// `[a, τb]`, zero when `b` is projective.
    pub fn hom_to_tau(&self, rs: &RootSystem, a: Root, b: Root) -> u32 {
        rs.tau_root(b).map_or(0, |tb| self.hom(a, tb))
    }

    pub fn size(&self) -> usize {
        self.hom.len()
    }

    /// CSV with rows and columns in word order; `ext` selects the Ext table.
    pub fn to_csv(&self, rs: &RootSystem, ext: bool) -> String {
        let table = if ext { &self.ext } else { &self.hom };
        let labels: Vec<String> = rs.roots().map(|r| csv_label(&rs.root_label(r))).collect();
        let mut out = String::from(if ext { "ext" } else { "hom" });
        for l in &labels {
            write!(out, ",{l}").unwrap();
        }
        out.push('\n');
        for (l, row) in labels.iter().zip(table) {
            out.push_str(l);
            for v in row {
                write!(out, ",{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

fn csv_label(label: &str) -> String {
    if label.contains(',') {
        format!("\"{label}\"")
    } else {
        label.to_string()
    }
}
