//! Serialization of spectra: the CSV table and the JSON document emitted by
//! the `spectrum` command.

use serde::{Deserialize, Serialize};

use super::spectrum::{basmajian_check, bridgeman_check, Spectrum};
use crate::format::fmt_f64;
use crate::real::Real;

/// CSV with one row per record and a running cumulative summand total.
pub fn spectrum_to_csv<R: Real>(s: &Spectrum<R>) -> String {
    let mut out = String::from("rank,i,j,word,length,summand,cumulative_sum\n");
    let mut cumulative = R::zero();
    for (idx, r) in s.records.iter().enumerate() {
        cumulative += r.summand;
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            idx + 1,
            r.i,
            r.j,
            r.word,
            fmt_f64(r.length.as_f64()),
            fmt_f64(r.summand.as_f64()),
            fmt_f64(cumulative.as_f64()),
        ));
    }
    out
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SurfaceJson {
    pub b1: f64,
    pub b2: f64,
    pub b3: f64,
    pub euler_char: i32,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RecordJson {
    pub i: u8,
    pub j: u8,
    pub word: String,
    pub length: f64,
    pub summand: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct IdentityJson {
    pub partial: f64,
    pub rhs: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SpectrumJson {
    pub surface: SurfaceJson,
    pub max_word_length: usize,
    pub completeness_length: f64,
    pub records: Vec<RecordJson>,
    pub bridgeman: IdentityJson,
    pub basmajian: IdentityJson,
}

pub fn spectrum_to_json<R: Real>(s: &Spectrum<R>) -> SpectrumJson {
    let bri = bridgeman_check(s);
    let bas = basmajian_check(s);
    SpectrumJson {
        surface: SurfaceJson {
            b1: s.boundary_lengths[0].as_f64(),
            b2: s.boundary_lengths[1].as_f64(),
            b3: s.boundary_lengths[2].as_f64(),
            euler_char: s.euler_char,
        },
        max_word_length: s.max_word_length,
        completeness_length: s.completeness_length.as_f64(),
        records: s
            .records
            .iter()
            .map(|r| RecordJson {
                i: r.i,
                j: r.j,
                word: r.word.to_string(),
                length: r.length.as_f64(),
                summand: r.summand.as_f64(),
            })
            .collect(),
        bridgeman: IdentityJson {
            partial: bri.partial_sum.as_f64(),
            rhs: bri.rhs.as_f64(),
            residual: bri.residual.as_f64(),
        },
        basmajian: IdentityJson {
            partial: bas.partial_sum.as_f64(),
            rhs: bas.rhs.as_f64(),
            residual: bas.residual.as_f64(),
        },
    }
}
