//! Command inputs: a polytope file or a degeneration fixture.

use std::path::Path;

use fanoscope::degeneration::{facet_decompositions, method1_data, DegenerationData};
use fanoscope::invariants::KnownValues;
use fanoscope::io::{parse_fixture_str, parse_polytope_str, Fixture, PolytopeFile};
use fanoscope::polytope::LatticePolytope;
use fanoscope::{Error, Result};

/// A parsed command input.
#[derive(Clone, Debug)]
pub enum Input {
    Polytope(PolytopeFile),
    Fixture(Box<Fixture>),
}

/// Reads a fixture when the file is a JSON object with a `construction`
/// field, and a polytope otherwise.
pub fn load_input(path: &Path) -> Result<Input> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {}", path.display(), e)))?;
    let is_fixture = serde_json::from_str::<serde_json::Value>(&text)
        .ok()
        .and_then(|v| v.as_object().map(|o| o.contains_key("construction")))
        .unwrap_or(false);
    if is_fixture {
        Ok(Input::Fixture(Box::new(parse_fixture_str(&text)?)))
    } else {
        Ok(Input::Polytope(parse_polytope_str(&text)?))
    }
}

/// How to pick smooth decompositions for a polytope input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionArg {
    /// Every combination of choices.
    Auto,
    /// One index per facet.
    List(Vec<usize>),
}

impl std::str::FromStr for DecompositionArg {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "auto" {
            return Ok(DecompositionArg::Auto);
        }
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| format!("`{}` is not a decomposition index", t)))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(DecompositionArg::List)
    }
}

/// Data built from smooth decompositions of the facets of `p`, one index
/// per facet.
pub fn method1_with_choice(name: &str, p: &LatticePolytope, choice: &[usize]) -> Result<DegenerationData> {
    let decs = facet_decompositions(p)?;
    if choice.len() != decs.len() {
        return Err(Error::Validation(format!(
            "choice lists {} facets, the polytope has {}",
            choice.len(),
            decs.len()
        )));
    }
    let picked = decs
        .iter()
        .zip(choice)
        .enumerate()
        .map(|(f, (d, &i))| {
            d.get(i)
                .cloned()
                .ok_or_else(|| Error::Validation(format!("facet {} has {} decompositions, not {}", f, d.len(), i + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    method1_data(name, p, &picked)
}

/// A display name for a polytope file.
pub fn polytope_name(file: &PolytopeFile, path: &Path) -> String {
    file.name.clone().unwrap_or_else(|| {
        path.file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "polytope".to_string())
    })
}

/// Degeneration data for an input: fixtures build themselves, polytopes use
/// the given choice or the first decomposition of every facet.
pub fn build_data(input: &Input, path: &Path, choice: Option<&[usize]>) -> Result<(DegenerationData, KnownValues)> {
    match input {
        Input::Fixture(f) => {
            if choice.is_some() {
                return Err(Error::Validation(
                    "a decomposition choice only applies to polytope inputs".into(),
                ));
            }
            Ok((f.build()?, f.known_values()))
        }
        Input::Polytope(file) => {
            let name = polytope_name(file, path);
            let choice = match choice {
                Some(c) => c.to_vec(),
                None => vec![0; facet_decompositions(&file.polytope)?.len()],
            };
            Ok((method1_with_choice(&name, &file.polytope, &choice)?, KnownValues::default()))
        }
    }
}
