//! Text and JSON formats.
//!
//! * Graphs: edge list, first line `n_vertices`, then one `u v` per line.
//! * Colouring pairs: JSON `{"N": .., "c1": [..], "c2": [..]}`.
//! * Point sets: CSV with a leading `# n=.. r=.. seed=..` comment, an
//!   `x,y` header and one point per row.
//! * Partitions and coloured instances: JSON.

use std::io::{BufRead, Write};

use serde::Serialize;

use crate::colouring::ColouringPair;
use crate::embed::{ColouredRgg, Failure, Regime, RegimeParams};
use crate::error::{Error, Result};
use crate::geo::{CellPartition, Point, PointSet};
use crate::graph::Graph;

/// Version tag written into every JSON document this crate emits.
pub const SCHEMA_VERSION: u32 = 1;

pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    writeln!(out, "{}", g.n_vertices())?;
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

/// Blank lines and lines starting with `#` are ignored.
pub fn read_edge_list<R: BufRead>(input: R) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|e| Error::Parse {
                line: lineno,
                message: format!("{s:?}: {e}"),
            })
        };
        let fields: Vec<&str> = text.split_whitespace().collect();
        match (n, fields.as_slice()) {
            (None, [count]) => n = Some(parse(count)?),
            (Some(_), [u, v]) => edges.push((parse(u)?, parse(v)?)),
            _ => {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("unexpected line {text:?}"),
                })
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        message: "missing vertex count".into(),
    })?;
    Graph::from_edges(n, edges)
}

pub fn write_colouring<W: Write>(p: &ColouringPair, out: W) -> Result<()> {
    serde_json::to_writer(out, p)?;
    Ok(())
}

pub fn read_colouring<R: std::io::Read>(input: R) -> Result<ColouringPair> {
    Ok(serde_json::from_reader(input)?)
}

pub fn write_point_set<W: Write>(ps: &PointSet, mut out: W) -> Result<()> {
    let seed = ps.seed().map_or_else(|| "none".to_string(), |s| s.to_string());
    writeln!(out, "# n={} r={} seed={}", ps.len(), ps.r(), seed)?;
    let mut csv = csv::Writer::from_writer(out);
    csv.write_record(["x", "y"])?;
    for p in ps.points() {
        csv.serialize((p.x, p.y))?;
    }
    csv.flush()?;
    Ok(())
}

pub fn read_point_set<R: BufRead>(mut input: R) -> Result<PointSet> {
    let mut header = String::new();
    input.read_line(&mut header)?;
    let comment = header.trim().strip_prefix('#').ok_or(Error::Parse {
        line: 1,
        message: "expected '# n=.. r=.. seed=..' header".into(),
    })?;
    let mut n = None;
    let mut r = None;
    let mut seed = None;
    for field in comment.split_whitespace() {
        let bad = || Error::Parse {
            line: 1,
            message: format!("bad header field {field:?}"),
        };
        let (key, value) = field.split_once('=').ok_or_else(bad)?;
        match key {
            "n" => n = Some(value.parse::<usize>().map_err(|_| bad())?),
            "r" => r = Some(value.parse::<f64>().map_err(|_| bad())?),
            "seed" if value == "none" => {}
            "seed" => seed = Some(value.parse::<u64>().map_err(|_| bad())?),
            _ => return Err(bad()),
        }
    }
    let (n, r) = match (n, r) {
        (Some(n), Some(r)) => (n, r),
        _ => {
            return Err(Error::Parse {
                line: 1,
                message: "header must carry n and r".into(),
            })
        }
    };
    let mut reader = csv::Reader::from_reader(input);
    let points = reader
        .deserialize::<(f64, f64)>()
        .map(|row| row.map(|(x, y)| Point::new(x, y)))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if points.len() != n {
        return Err(Error::Parse {
            line: 0,
            message: format!("header says n={n} but {} points follow", points.len()),
        });
    }
    Ok(PointSet::new(points, r)?.with_seed(seed))
}

#[derive(Serialize)]
struct PartitionDoc<'a> {
    schema_version: u32,
    #[serde(flatten)]
    partition: &'a CellPartition,
}

pub fn write_partition<W: Write>(cp: &CellPartition, out: W) -> Result<()> {
    serde_json::to_writer(
        out,
        &PartitionDoc {
            schema_version: SCHEMA_VERSION,
            partition: cp,
        },
    )?;
    Ok(())
}

#[derive(Serialize)]
struct ColouredDoc<'a> {
    schema_version: u32,
    regime: Regime,
    params: &'a RegimeParams,
    n: usize,
    r: f64,
    seed: Option<u64>,
    palette: usize,
    declared_palette: usize,
    homomorphism_ok: bool,
    failure: &'a Option<Failure>,
    c1: &'a [usize],
    c2: &'a [usize],
    points: Vec<[f64; 2]>,
}

pub fn write_coloured_rgg<W: Write>(c: &ColouredRgg, out: W) -> Result<()> {
    let doc = ColouredDoc {
        schema_version: SCHEMA_VERSION,
        regime: c.regime(),
        params: &c.params,
        n: c.point_set.len(),
        r: c.point_set.r(),
        seed: c.point_set.seed(),
        palette: c.palette_size(),
        declared_palette: c.declared_palette,
        homomorphism_ok: c.homomorphism_ok,
        failure: &c.failure,
        c1: c.pair.c1(),
        c2: c.pair.c2(),
        points: c.point_set.points().iter().map(|p| [p.x, p.y]).collect(),
    };
    serde_json::to_writer_pretty(out, &doc)?;
    Ok(())
}
