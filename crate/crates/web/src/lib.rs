//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every exported function returns a JSON string; errors surface as a JS
//! exception carrying the error message. The plain `*_json` functions hold
//! the logic so it can be tested natively.

use binconic::cli::views::{ClassifyView, PencilScanView, TraceTableView};
use binconic::gf2n::parse_hex;
use binconic::pg2::{ProjectivePoint, VerdictKind};
use binconic::FieldSpec;
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest degree the page will draw point grids for.
pub const MAX_PLOT_DEGREE: u32 = 6;
/// Largest degree for which whole tables or scans are returned.
pub const MAX_TABLE_DEGREE: u32 = 12;

fn field(n: u32, modulus: &str) -> Result<FieldSpec, String> {
    let modulus = match modulus.trim() {
        "" => None,
        m => Some(parse_hex(m).map_err(|e| e.to_string())?),
    };
    FieldSpec::new(n, modulus).map_err(|e| e.to_string())
}

fn table_sized(n: u32) -> Result<(), String> {
    if n > MAX_TABLE_DEGREE {
        return Err(format!(
            "n = {n} is too large for the browser demo (max {MAX_TABLE_DEGREE})"
        ));
    }
    Ok(())
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("views serialize infallibly")
}

pub fn trace_table_json(n: u32, modulus: &str) -> Result<String, String> {
    table_sized(n)?;
    Ok(json(&TraceTableView::new(&field(n, modulus)?)))
}

#[derive(Serialize)]
struct ClassifyPlot {
    #[serde(flatten)]
    view: ClassifyView,
    q: u64,
    /// Conic points as `[y, z]` in the affine chart `(1 : y : z)`.
    affine: Vec<[u64; 2]>,
    /// Conic points on the line `x = 0`, as `y:z`.
    at_infinity: Vec<ProjectivePoint>,
}

pub fn classify_json(n: u32, modulus: &str, coeffs: &str) -> Result<String, String> {
    let f = field(n, modulus)?;
    let view = ClassifyView::parse(&f, coeffs).map_err(|e| e.to_string())?;
    let (affine, at_infinity) = if n <= MAX_PLOT_DEGREE {
        let pts = view.conic.point_set();
        let (aff, inf): (Vec<_>, Vec<_>) = pts.into_iter().partition(|p| p.coords()[0].is_one());
        (
            aff.iter()
                .map(|p| [p.coords()[1].bits(), p.coords()[2].bits()])
                .collect(),
            inf,
        )
    } else {
        (Vec::new(), Vec::new())
    };
    Ok(json(&ClassifyPlot {
        view,
        q: f.order(),
        affine,
        at_infinity,
    }))
}

#[derive(Serialize)]
struct ScanSummary {
    #[serde(flatten)]
    view: PencilScanView,
    real_line_pairs: usize,
    imaginary_line_pairs: usize,
}

pub fn pencil_scan_json(n: u32, modulus: &str, alpha: &str, beta: &str) -> Result<String, String> {
    table_sized(n)?;
    let view =
        PencilScanView::parse(&field(n, modulus)?, alpha, beta).map_err(|e| e.to_string())?;
    let count = |k: VerdictKind| view.rows.iter().filter(|r| r.verdict == k).count();
    Ok(json(&ScanSummary {
        real_line_pairs: count(VerdictKind::RealLinePair),
        imaginary_line_pairs: count(VerdictKind::ImaginaryLinePair),
        view,
    }))
}

#[wasm_bindgen(js_name = traceTable)]
pub fn trace_table(n: u32, modulus: &str) -> Result<String, JsValue> {
    trace_table_json(n, modulus).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = classifyConic)]
pub fn classify_conic(n: u32, modulus: &str, coeffs: &str) -> Result<String, JsValue> {
    classify_json(n, modulus, coeffs).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = pencilScan)]
pub fn pencil_scan(n: u32, modulus: &str, alpha: &str, beta: &str) -> Result<String, JsValue> {
    pencil_scan_json(n, modulus, alpha, beta).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn trace_table_gf4() {
        let v = parse(&trace_table_json(2, "").unwrap());
        assert_eq!(v["trace1"], 2);
        assert_eq!(v["rows"][2]["trace"], 1);
        assert!(trace_table_json(13, "").is_err());
        assert!(trace_table_json(3, "9").unwrap_err().contains("reducible"));
    }

    #[test]
    fn classify_reports_points() {
        let v = parse(&classify_json(3, "", "0,0,0,1,0,0").unwrap());
        assert_eq!(v["verdict"], "RealLinePair");
        assert_eq!(v["q"], 8);
        // xy = 0: affine points (1:0:z) plus (0:1:z) and (0:0:1) at infinity.
        assert_eq!(v["affine"].as_array().unwrap().len(), 8);
        assert_eq!(v["at_infinity"].as_array().unwrap().len(), 9);
        assert!(classify_json(3, "", "0,0,0,0,0,0")
            .unwrap_err()
            .contains("zero conic"));
    }

    #[test]
    fn pencil_scan_counts() {
        let v = parse(&pencil_scan_json(3, "", "1", "2").unwrap());
        assert_eq!(v["degenerate_count"], 3);
        assert_eq!(v["real_line_pairs"], 1);
        assert_eq!(v["imaginary_line_pairs"], 2);
        assert_eq!(v["rows"].as_array().unwrap().len(), 9);
        assert!(pencil_scan_json(3, "", "2", "2").is_err());
    }
}
