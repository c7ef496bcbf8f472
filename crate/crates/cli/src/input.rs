//! Graph sources: graph6 files, inline records and generated families.

use std::fs::File;
use std::io::{self, BufRead, BufReader};

use anyhow::{bail, Context, Result};
use qspec_core::family::{generate, FamilySpec, GnpSampler};
use qspec_core::graph6::from_graph6;
use qspec_core::Graph;

use crate::args::{FamilyKind, SourceArgs};

/// One entry of a graph source.
#[derive(Debug)]
pub enum Item {
    Graph(Graph),
    /// Unparseable record; `line` is 1-based within its source.
    Error {
        line: usize,
        message: String,
    },
}

pub type Items = Box<dyn Iterator<Item = Item> + Send>;

/// Parses newline-separated graph6 records, skipping blank and `#` lines.
pub fn parse_lines<R: BufRead + Send + 'static>(reader: R) -> Items {
    Box::new(reader.lines().enumerate().filter_map(|(i, line)| {
        let line_no = i + 1;
        match line {
            Err(e) => Some(Item::Error { line: line_no, message: e.to_string() }),
            Ok(text) => {
                let record = text.trim();
                if record.is_empty() || record.starts_with('#') {
                    None
                } else {
                    Some(match from_graph6(record) {
                        Ok(g) => Item::Graph(g),
                        Err(e) => Item::Error { line: line_no, message: e.to_string() },
                    })
                }
            }
        }
    }))
}

pub fn open(source: &SourceArgs) -> Result<Items> {
    if let Some(path) = &source.input {
        if path.as_os_str() == "-" {
            return Ok(parse_lines(BufReader::new(io::stdin())));
        }
        let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
        return Ok(parse_lines(BufReader::new(file)));
    }
    if !source.g6.is_empty() {
        let records = source.g6.join("\n");
        return Ok(parse_lines(io::Cursor::new(records.into_bytes())));
    }
    let Some(kind) = source.family else {
        bail!("one of --input, --g6 or --family is required");
    };
    let Some(range) = source.n.clone() else {
        bail!("--family needs --n");
    };
    let specs: Vec<FamilySpec> = match kind {
        FamilyKind::CompleteBipartite => {
            let Some(b) = source.b else {
                bail!("complete_bipartite needs --b");
            };
            range.map(|a| FamilySpec::CompleteBipartite { a, b }).collect()
        }
        _ => range.map(|n| family_spec(kind, n, source)).collect(),
    };
    for spec in &specs {
        spec.validate()?;
    }
    let samples = source.samples;
    Ok(Box::new(specs.into_iter().flat_map(move |spec| -> Box<dyn Iterator<Item = Item> + Send> {
        match spec {
            FamilySpec::Gnp { n, p, seed } => {
                let mut sampler = GnpSampler::new(n, p, seed);
                Box::new((0..samples).map(move |_| Item::Graph(sampler.sample())))
            }
            _ => Box::new(generate(spec).expect("validated").map(Item::Graph)),
        }
    })))
}

fn family_spec(kind: FamilyKind, n: usize, source: &SourceArgs) -> FamilySpec {
    match kind {
        FamilyKind::Complete => FamilySpec::Complete { n },
        FamilyKind::Star => FamilySpec::Star { n },
        FamilyKind::Path => FamilySpec::Path { n },
        FamilyKind::Cycle => FamilySpec::Cycle { n },
        FamilyKind::Gnp => FamilySpec::Gnp { n, p: source.p, seed: source.seed },
        FamilyKind::Exhaustive => FamilySpec::Exhaustive { n, connected_only: false },
        FamilyKind::CompleteBipartite => unreachable!("handled by the caller"),
    }
}
