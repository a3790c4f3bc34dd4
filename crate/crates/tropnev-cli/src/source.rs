//! Input loading. Function-bearing flags accept grammar text, a JSON
//! document in the library wire formats, or a path to a file holding
//! either; JSON is recognized by its leading `{` or `[`.

use tropnev::{HomogeneousPolynomial, ProjectiveMap, TropicalPolynomial, TropicalRational};

use crate::expr;

/// Inline text, or the contents of the file the text names.
pub fn load_text(arg: &str) -> Result<String, String> {
    let p = std::path::Path::new(arg);
    if p.is_file() {
        std::fs::read_to_string(p).map_err(|e| format!("cannot read {arg}: {e}"))
    } else {
        Ok(arg.to_string())
    }
}

fn looks_like_json(text: &str) -> bool {
    matches!(text.trim_start().chars().next(), Some('{') | Some('['))
}

pub fn load_function(arg: &str) -> Result<(TropicalRational, Vec<String>), String> {
    let text = load_text(arg)?;
    if looks_like_json(&text) {
        let f = serde_json::from_str::<TropicalRational>(text.trim())
            .map_err(|e| format!("function document: {e}"))?;
        Ok((f, Vec::new()))
    } else {
        expr::parse_rational(text.trim()).map_err(|e| e.to_string())
    }
}

pub fn load_entire(arg: &str) -> Result<(TropicalPolynomial, Vec<String>), String> {
    let text = load_text(arg)?;
    if looks_like_json(&text) {
        let p = serde_json::from_str::<TropicalPolynomial>(text.trim())
            .map_err(|e| format!("polynomial document: {e}"))?;
        Ok((p, Vec::new()))
    } else {
        expr::parse_polynomial(text.trim()).map_err(|e| e.to_string())
    }
}

pub fn load_map(arg: &str) -> Result<ProjectiveMap, String> {
    let text = load_text(arg)?;
    ProjectiveMap::from_json(text.trim()).map_err(|e| format!("map document: {e}"))
}

pub fn load_hyper(arg: &str) -> Result<HomogeneousPolynomial, String> {
    let text = load_text(arg)?;
    HomogeneousPolynomial::from_json(text.trim())
        .map_err(|e| format!("hypersurface document: {e}"))
}

/// Comma-separated finite reals, as in `--at 1,2` or `--c 0.5`.
pub fn parse_vector(s: &str, what: &str) -> Result<Vec<f64>, String> {
    let mut out = Vec::new();
    for part in s.split(',') {
        let v: f64 = part
            .trim()
            .parse()
            .map_err(|_| format!("{what}: '{part}' is not a number"))?;
        if !v.is_finite() {
            return Err(format!("{what}: entries must be finite, got {v}"));
        }
        out.push(v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_json_and_files_all_load() {
        let (f, _) = load_function("0:1|0:0/0:1|1:0").expect("grammar");
        let json = serde_json::to_string(&f).expect("serializes");
        let (g, _) = load_function(&json).expect("json");
        assert_eq!(f, g);

        let dir = std::env::temp_dir().join("tropnev-cli-source-test");
        std::fs::create_dir_all(&dir).expect("temp dir");
        let path = dir.join("f.json");
        std::fs::write(&path, &json).expect("write");
        let (h, _) = load_function(path.to_str().expect("utf-8 path")).expect("file");
        assert_eq!(f, h);
    }

    #[test]
    fn vectors_parse_and_reject_junk() {
        assert_eq!(parse_vector("1, 2,-0.5", "--at").unwrap(), vec![1.0, 2.0, -0.5]);
        assert!(parse_vector("1,x", "--at").is_err());
        assert!(parse_vector("inf", "--at").is_err());
    }
}
