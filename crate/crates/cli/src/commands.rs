use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use orthogrid::experiments::{
    emit_report, emit_svg, parse_alpha, run_dense_campaign, run_optimal_campaign, run_theorem_one_campaign,
    CampaignReport, CsvRow, ExperimentConfig, GridShape, RegimeConfig, ReportFormat, Thresholds,
};
use orthogrid::{
    build_h, build_l, colour_h, colour_rgg_dense, colour_rgg_optimal, compose_orthogonal, io as formats, verify as check, DenseParams,
    Graph, HParams, OptimalParams, PointSet,
};

use crate::{CampaignArgs, GraphKind, RenderArgs, RenderRegime};

fn load_config(path: &Path) -> Result<ExperimentConfig> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let cfg = if path.extension().is_some_and(|e| e == "json") {
        serde_json::from_str(&text)?
    } else {
        toml::from_str(&text)?
    };
    Ok(cfg)
}

fn base_config(common: &CampaignArgs, fallback: RegimeConfig) -> Result<ExperimentConfig> {
    match &common.config {
        Some(path) => load_config(path),
        None => Ok(ExperimentConfig {
            regime: fallback,
            trials: 1,
            base_seed: 0,
            thresholds: Thresholds::default(),
            output: Default::default(),
        }),
    }
}

fn apply_common(cfg: &mut ExperimentConfig, common: &CampaignArgs) {
    if let Some(trials) = common.trials {
        cfg.trials = trials;
    }
    if let Some(seed) = common.seed {
        cfg.base_seed = seed;
    }
    if let Some(dir) = &common.out_dir {
        cfg.output.dir = dir.clone();
    }
    if let Some(stem) = &common.stem {
        cfg.output.stem = Some(stem.clone());
    }
}

fn write_outputs<R: CsvRow>(report: &CampaignReport<R>) -> Result<(PathBuf, PathBuf)> {
    let cfg = &report.config;
    fs::create_dir_all(&cfg.output.dir).with_context(|| format!("creating {}", cfg.output.dir.display()))?;
    let stem = cfg.output.stem.as_deref().unwrap_or(cfg.default_stem());
    let csv = cfg.output.dir.join(format!("{stem}.csv"));
    let json = cfg.output.dir.join(format!("{stem}.json"));
    for (path, format) in [(&csv, ReportFormat::Csv), (&json, ReportFormat::Json)] {
        let mut out = BufWriter::new(File::create(path).with_context(|| format!("creating {}", path.display()))?);
        emit_report(report, format, &mut out)?;
        out.flush()?;
    }
    eprintln!("wrote {} and {} in {:.2?}", csv.display(), json.display(), report.wall_time);
    Ok((csv, json))
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "below threshold"
    }
}

pub fn theorem_one(
    max_m: Option<usize>,
    max_d: Option<usize>,
    max_t: Option<usize>,
    oracle_max_vertices: Option<usize>,
    common: &CampaignArgs,
) -> Result<()> {
    let fallback = RegimeConfig::TheoremOne {
        max_m: 6,
        max_d: 2,
        max_t: 2,
        oracle_max_vertices: 12,
    };
    let mut cfg = base_config(common, fallback)?;
    let RegimeConfig::TheoremOne {
        max_m: cm,
        max_d: cd,
        max_t: ct,
        oracle_max_vertices: co,
    } = &mut cfg.regime
    else {
        bail!("configuration is not a theorem_one sweep");
    };
    *cm = max_m.unwrap_or(*cm);
    *cd = max_d.unwrap_or(*cd);
    *ct = max_t.unwrap_or(*ct);
    *co = oracle_max_vertices.unwrap_or(*co);
    apply_common(&mut cfg, common);
    let report = run_theorem_one_campaign(&cfg)?;
    write_outputs(&report)?;
    for row in report.rows.iter().filter(|r| r.oracle_mismatch()) {
        println!(
            "discrepancy ({}, {}, {}): oracle {:?}, formula {}{}",
            row.m,
            row.d,
            row.t,
            row.oracle,
            row.formula,
            if row.degenerate { " (degenerate: H is complete)" } else { "" }
        );
    }
    let failed: Vec<_> = report.rows.iter().filter(|r| !r.passed).map(|r| (r.m, r.d, r.t)).collect();
    println!("{} instances, {} failed", report.rows.len(), failed.len());
    if !failed.is_empty() {
        bail!("failing instances: {failed:?}");
    }
    Ok(())
}

pub fn dense(n: Vec<usize>, alpha: Option<String>, common: &CampaignArgs) -> Result<()> {
    let mut cfg = base_config(common, RegimeConfig::Dense { n: vec![], alpha: 0.25 })?;
    let RegimeConfig::Dense { n: cn, alpha: ca } = &mut cfg.regime else {
        bail!("configuration is not a dense campaign");
    };
    if !n.is_empty() {
        *cn = n;
    }
    if let Some(a) = alpha {
        *ca = parse_alpha(&a)?;
    }
    apply_common(&mut cfg, common);
    let report = run_dense_campaign(&cfg)?;
    write_outputs(&report)?;
    let th = cfg.thresholds;
    for row in &report.rows {
        println!(
            "n={} t={} m={} d={}: embed {:.3} ({}), homomorphism {}, verify {}, mean palette {}, palette/sqrt(n) {}",
            row.n,
            row.t,
            row.m,
            row.d,
            row.embed_success_rate,
            mark(row.embed_success_rate >= th.min_embed_success_rate),
            fmt_opt(row.homomorphism_rate),
            fmt_opt(row.verify_rate),
            fmt_opt(row.mean_palette),
            fmt_opt(row.palette_over_sqrt_n),
        );
    }
    Ok(())
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "n/a".to_string(), |x| format!("{x:.3}"))
}

fn parse_shape(text: &str) -> Result<GridShape> {
    let (m, t) = text
        .split_once(['x', 'X'])
        .ok_or_else(|| anyhow!("grid shape {text:?} is not of the form MxT"))?;
    Ok(GridShape {
        m: m.trim().parse().with_context(|| format!("bad m in {text:?}"))?,
        t: t.trim().parse().with_context(|| format!("bad t in {text:?}"))?,
    })
}

pub fn optimal(grid: Vec<String>, c: Option<f64>, d: Option<usize>, common: &CampaignArgs) -> Result<()> {
    let fallback = RegimeConfig::Optimal {
        grid: vec![],
        c: 0.5,
        d: None,
    };
    let mut cfg = base_config(common, fallback)?;
    let RegimeConfig::Optimal { grid: cg, c: cc, d: cd } = &mut cfg.regime else {
        bail!("configuration is not an optimal campaign");
    };
    if !grid.is_empty() {
        *cg = grid.iter().map(|s| parse_shape(s)).collect::<Result<_>>()?;
    }
    *cc = c.unwrap_or(*cc);
    if d.is_some() {
        *cd = d;
    }
    apply_common(&mut cfg, common);
    let report = run_optimal_campaign(&cfg)?;
    write_outputs(&report)?;
    let th = cfg.thresholds;
    for row in &report.rows {
        let regime = if row.case_three {
            format!("palette/sqrt(n) {}", fmt_opt(row.palette_over_sqrt_n))
        } else {
            format!("outside the square-root regime: m = {} <= t(d+1)^2", row.m)
        };
        println!(
            "m={} t={} n={} d={}: deviation {:.3} ({}), x-bound{}, homomorphism {:.3} ({}), {regime}",
            row.m,
            row.t,
            row.n,
            row.d,
            row.deviation_pass_rate,
            mark(row.deviation_pass_rate >= th.min_deviation_pass_rate),
            if row.x_bound_vacuous { " vacuous" } else { " informative" },
            row.homomorphism_rate,
            mark(row.homomorphism_rate >= th.min_homomorphism_rate),
        );
    }
    Ok(())
}

pub fn render(args: &RenderArgs) -> Result<()> {
    let coloured = match args.regime {
        RenderRegime::Dense => {
            let dp = DenseParams::derive(args.n, parse_alpha(&args.alpha)?)?;
            let ps = PointSet::sample(dp.n, dp.r, args.seed)?;
            colour_rgg_dense(&ps, &ps.graph(), &dp)?
        }
        RenderRegime::Optimal => {
            let (m, t) = match (args.m, args.t) {
                (Some(m), Some(t)) => (m, t),
                _ => bail!("the optimal regime needs --m and --t"),
            };
            let derived = OptimalParams::from_c(m, t, args.c)?;
            let op = match args.d {
                Some(d) => OptimalParams::with_d(m, t, d, derived.r)?,
                None => derived,
            };
            let ps = PointSet::sample(op.n, op.r, args.seed)?;
            colour_rgg_optimal(&ps, &ps.graph(), &op)?
        }
    };
    let mut out = BufWriter::new(File::create(&args.svg)?);
    emit_svg(&coloured, &mut out)?;
    out.flush()?;
    if let Some(path) = &args.json {
        let mut out = BufWriter::new(File::create(path)?);
        formats::write_coloured_rgg(&coloured, &mut out)?;
        out.flush()?;
    }
    println!(
        "{} points, palette {} (grid palette {}), homomorphism {}",
        coloured.point_set.len(),
        coloured.palette_size(),
        coloured.declared_palette,
        coloured.homomorphism_ok
    );
    Ok(())
}

pub fn verify(graph: &Path, colouring: &Path) -> Result<()> {
    let g = formats::read_edge_list(BufReader::new(File::open(graph)?))?;
    let pair = formats::read_colouring(BufReader::new(File::open(colouring)?))?;
    let report = check(&g, &pair)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    if !report.passed() {
        bail!("colouring is not a proper orthogonal pair");
    }
    Ok(())
}

pub fn construct(
    which: GraphKind,
    m: usize,
    d: usize,
    t: usize,
    graph: Option<&Path>,
    colouring: Option<&Path>,
) -> Result<()> {
    let p = HParams::new(m, d, t)?;
    let (g, pair) = match which {
        GraphKind::H => (build_h(p)?, colour_h(p)),
        GraphKind::L => {
            let factor = colour_h(p);
            (build_l(p)?, compose_orthogonal(&factor, &factor))
        }
    };
    write_graph(&g, graph)?;
    if let Some(path) = colouring {
        let mut out = BufWriter::new(File::create(path)?);
        formats::write_colouring(&pair, &mut out)?;
        out.flush()?;
    }
    eprintln!("{} vertices, {} edges, palette {}", g.n_vertices(), g.n_edges(), pair.palette_size());
    Ok(())
}

fn write_graph(g: &Graph, path: Option<&Path>) -> Result<()> {
    match path {
        Some(path) => {
            let mut out = BufWriter::new(File::create(path)?);
            formats::write_edge_list(g, &mut out)?;
            out.flush()?;
        }
        None => formats::write_edge_list(g, io::stdout().lock())?,
    }
    Ok(())
}

pub fn sample(n: usize, r: f64, seed: u64, out: &Path, graph: Option<&Path>) -> Result<()> {
    let ps = PointSet::sample(n, r, seed)?;
    let mut w = BufWriter::new(File::create(out)?);
    formats::write_point_set(&ps, &mut w)?;
    w.flush()?;
    if let Some(path) = graph {
        write_graph(&Graph::from_edge_set(&ps.graph()), Some(path))?;
    }
    Ok(())
}
