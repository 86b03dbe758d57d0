//! Golden tables of the sixteen worked examples.
//!
//! Cell values are stored exactly as printed, as strings, so that printing
//! quirks survive (a decimal comma, a seven-digit entry). Suspicious cells are
//! flagged through [`GoldenCell::anomaly`]; they are still compared.

use serde::Serialize;

use crate::radius::{EquationParams, LiteralTag, RadiusProblem, Theorem};

/// Half a unit in the last printed digit of the 5–6 digit tables.
pub const GOLDEN_TOLERANCE: f64 = 5e-5;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GoldenCell {
    pub params: EquationParams,
    pub golden_raw: &'static str,
    pub golden: f64,
    pub anomaly: Option<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableSpec {
    pub table_id: String,
    pub tag: LiteralTag,
    pub caption: &'static str,
    pub cells: Vec<GoldenCell>,
}

const MS: [u32; 4] = [1, 2, 3, 4];
const NS: [u32; 3] = [5, 10, 15];

/// Rows m = 1..4, columns (N, p) = (5,1) (10,1) (15,1) (5,2) (10,2) (15,2).
type WideRows = [[&'static str; 6]; 4];

const R1_ROWS: WideRows = [
    ["0.568466", "0.696983", "0.760135", "0.61803", "0.729092", "0.78422"],
    ["0.614046", "0.727963", "0.783716", "0.664727", "0.759979", "0.807561"],
    ["0.638474", "0.745208", "0.797015", "0.690133", "0.777215", "0.820717"],
    ["0.653901", "0.756719", "0.80606", "0.706669", "0.788828", "0.8297"],
];
const R4_ROWS: WideRows = [
    ["0.438303", "0.581973", "0.659598", "0.48227", "0.612325", "0.683058"],
    ["0.474555", "0.609805", "0.681863", "0.521603", "0.641053", "0.705692"],
    ["0.491663", "0.624482", "0.694054", "0.54118", "0.656495", "0.718209"],
    ["0.500617", "0.633465", "0.701928", "0.552248", "0.66623", "0.726424"],
];
const R5_ROWS: WideRows = [
    ["0.552822", "0.689323", "0.75805", "0.621637", "0.733723", "0.79105"],
    ["0.615996", "0.732181", "0.790394", "0.691438", "0.77864", "0.824341"],
    ["0.652463", "0.757175", "0.809302", "0.732289", "0.804895", "0.843792"],
    ["0.677166", "0.774533", "0.82254", "0.760641", "0.823255", "0.857442"],
];
const R6_ROWS: WideRows = [
    ["0.384343", "0.512948", "0.591745", "0.423699", "0.540931", "0.613822"],
    ["0.414554", "0.537391", "0.612014", "0.456968", "0.566525", "0.634665"],
    ["0.427417", "0.549435", "0.622616", "0.472121", "0.579505", "0.645746"],
    ["0.433293", "0.556135", "0.629021", "0.479709", "0.587025", "0.652601"],
];
const R8_ROWS: WideRows = [
    ["0.470417", "0.498733", "0.499959", "0.482881", "0.499358", "0.49998"],
    ["0.561279", "0.610534", "0.617281", "0.583333", "0.614053", "0.617654"],
    ["0.605857", "0.666331", "0.679507", "0.634512", "0.673433", "0.680874"],
    ["0.632413", "0.699984", "0.718457", "0.666291", "0.710367", "0.721294"],
];
const R9_ROWS: WideRows = [
    ["0.459924", "0.470621", "0.481132", "0.470621", "0.480648", "0.485091"],
    ["0.570642", "0.588913", "0.596301", "0.58335", "0.595553", "0.600837"],
    ["0.631077", "0.651295", "0.659307", "0.644949", "0.658391", "0.664114"],
    ["0.670628", "0.692296", "0.700735", "0.68537", "0.699696", "0.705709"],
];
const R10_ROWS: WideRows = [
    ["0.457053", "0.474009", "0.480671", "0.468802", "0,480015", "0.484755"],
    ["0.567068", "0.587828", "0.595758", "0.581095", "0.594794", "0.600441"],
    ["0.627057", "0.65011", "0.658721", "0.642428", "0.657565", "0.663687"],
    ["0.666256", "0.691041", "0.7001205", "0.682652", "0.698824", "0.705261"],
];
/// Rows m = 1..4, columns p = 1, 2.
const R2_ROWS: [[&str; 2]; 4] = [
    ["0.41421", "0.5"],
    ["0.48587", "0.57735"],
    ["0.52236", "0.61803"],
    ["0.54369", "0.64359"],
];
const R3_ROWS: [[&str; 2]; 4] = [
    ["0.26795", "0.38197"],
    ["0.34601", "0.48053"],
    ["0.38197", "0.53101"],
    ["0.399389", "0.56127"],
];
/// Rows m = 1..4, columns N = 5, 10, 15.
const R11_ROWS: [[&str; 3]; 4] = [
    ["0.171125", "0.171573", "0.171573"],
    ["0.372068", "0.412677", "0.414185"],
    ["0.432697", "0.531244", "0.553009"],
    ["0.453269", "0.576975", "0.624641"],
];
const R14_ROWS: [[&str; 3]; 4] = [
    ["0.330697", "0.333322", "0.333333"],
    ["0.536482", "0.573823", "0.577111"],
    ["0.607547", "0.673834", "0.689549"],
    ["0.640031", "0.719763", "0.746595"],
];
/// R7 is indexed by n = 1..4; the others by m = 1..4.
const R7_COL: [&str; 4] = ["0.23607", "0.41421", "0.51624", "0.58378"];
const R12_COL: [&str; 4] = ["0.14813", "0.26795", "0.30200", "0.31270"];
const R13_COL: [&str; 4] = ["0.164662", "0.322256", "0.369627", "0.386157"];
const R15_COL: [&str; 4] = ["0.28990", "0.44721", "0.50845", "0.53842"];
const R16_COL: [&str; 4] = ["0.21525", "0.33333", "0.37893", "0.39871"];

fn anomaly(tag: LiteralTag, params: &EquationParams, raw: &str) -> Option<&'static str> {
    if raw.contains(',') {
        return Some("printed with a decimal comma");
    }
    if raw.trim_start_matches("0.").len() > 6 {
        return Some("printed with seven significant digits");
    }
    if tag == LiteralTag::R9 && params.m == 1 && params.n == 10 && params.p == 1.0 {
        return Some("printed value repeats the (m=1, N=5, p=2) cell; the equation gives 0.474915");
    }
    None
}

fn cell(tag: LiteralTag, params: EquationParams, raw: &'static str) -> GoldenCell {
    let golden = raw
        .replace(',', ".")
        .parse()
        .expect("golden tables hold decimal numbers");
    GoldenCell {
        params,
        golden_raw: raw,
        golden,
        anomaly: anomaly(tag, &params, raw),
    }
}

fn caption(tag: LiteralTag) -> &'static str {
    use LiteralTag::*;
    match tag {
        R1 => "Computation of $R_1^{m,N}(p)$",
        R2 => "Computation of the roots $R_2^m(p)$",
        R3 => "The roots $R_3^m(p)$",
        R4 => "Computation of $R_4^{m,N}(p)$",
        R5 => "The values of $R_5^{m,N}(p)$",
        R6 => "Computation of $R_6^{m,N}(p)$",
        R7 => "The roots $R_7^n$",
        R8 => "Computation of $R_8^{m,N}(p)$",
        R9 => "The values $R_9^{m,N}(p)$",
        R10 => "Computation of $R_{10}^{m,N}(p)$",
        R11 => "Computation of $R_{11}^{m,N}$",
        R12 => "Values of $R_{12}^{m}$",
        R13 => "The values of $R_{13}^{m}$",
        R14 => "Values of $R_{14}^{m,N}$",
        R15 => "Computation of $R_{15}^{m}$",
        R16 => "The roots $R_{16}^{m}$",
    }
}

/// The golden table for one example, cells in row-major printed order.
pub fn table(tag: LiteralTag) -> TableSpec {
    use LiteralTag::*;
    let mut cells = Vec::new();
    let wide = match tag {
        R1 => Some(&R1_ROWS),
        R4 => Some(&R4_ROWS),
        R5 => Some(&R5_ROWS),
        R6 => Some(&R6_ROWS),
        R8 => Some(&R8_ROWS),
        R9 => Some(&R9_ROWS),
        R10 => Some(&R10_ROWS),
        _ => None,
    };
    if let Some(rows) = wide {
        for (m, row) in MS.iter().zip(rows) {
            for (col, raw) in row.iter().enumerate() {
                let p = if col < 3 { 1.0 } else { 2.0 };
                let params = EquationParams::new(p, *m, NS[col % 3]);
                cells.push(cell(tag, params, raw));
            }
        }
    }
    match tag {
        R2 | R3 => {
            let rows = if tag == R2 { &R2_ROWS } else { &R3_ROWS };
            for (m, row) in MS.iter().zip(rows) {
                for (p, raw) in [1.0, 2.0].iter().zip(row) {
                    cells.push(cell(tag, EquationParams::new(*p, *m, 1), raw));
                }
            }
        }
        R11 | R14 => {
            let rows = if tag == R11 { &R11_ROWS } else { &R14_ROWS };
            for (m, row) in MS.iter().zip(rows) {
                for (n, raw) in NS.iter().zip(row) {
                    cells.push(cell(tag, EquationParams::new(1.0, *m, *n), raw));
                }
            }
        }
        R7 => {
            for (n, raw) in MS.iter().zip(R7_COL) {
                cells.push(cell(tag, EquationParams::new(1.0, 1, *n), raw));
            }
        }
        R12 | R13 | R15 | R16 => {
            let col = match tag {
                R12 => R12_COL,
                R13 => R13_COL,
                R15 => R15_COL,
                _ => R16_COL,
            };
            for (m, raw) in MS.iter().zip(col) {
                cells.push(cell(tag, EquationParams::new(1.0, *m, 1), raw));
            }
        }
        _ => {}
    }
    TableSpec {
        table_id: tag.table_id(),
        tag,
        caption: caption(tag),
        cells,
    }
}

pub fn all_tables() -> Vec<TableSpec> {
    LiteralTag::ALL.iter().map(|&t| table(t)).collect()
}

/// Look up a table by identifier (`R7`, `r7`, `R7eq`).
pub fn table_by_id(id: &str) -> Option<TableSpec> {
    id.parse::<LiteralTag>().ok().map(table)
}

/// A canonical problem drawn from a table grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CatalogProblem {
    pub tag: LiteralTag,
    pub params: EquationParams,
    pub problem: RadiusProblem,
}

/// Canonical problems over every table grid, restricted to the `p` range of
/// the underlying theorem (T1: `p ≤ 1`, T2: `p ≤ 2`).
pub fn verification_problems() -> Vec<CatalogProblem> {
    all_tables()
        .into_iter()
        .flat_map(|t| {
            t.cells.into_iter().filter_map(move |c| {
                let problem = t.tag.canonical_problem(c.params);
                let keep = match problem.theorem {
                    Theorem::T1 | Theorem::T2 => problem.validate().is_ok(),
                    Theorem::T3 | Theorem::T4 => true,
                };
                keep.then_some(CatalogProblem {
                    tag: t.tag,
                    params: c.params,
                    problem,
                })
            })
        })
        .collect()
}
