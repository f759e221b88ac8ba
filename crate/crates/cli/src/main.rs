//! `tricent`: rank nodes, compare measures and run removal experiments on
//! Pajek or edge-list networks.

mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use tricent_core::experiments::{self, DEFAULT_SEED};
use tricent_core::io::{self, InputFormat};
use tricent_core::triangles::triangle_count;
use tricent_core::{compute, rank_top_k, Error, Graph, MeasureTag, Params};

use output::{Cell, Emission, OutputFormat, Table};

#[derive(Parser)]
#[command(
    name = "tricent",
    version,
    about = "Triangle-neighbourhood centrality and node-removal experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Top-k nodes of one measure with their scores.
    Rank {
        input: PathBuf,
        #[arg(long, default_value = "tc", value_parser = parse_tag)]
        measure: MeasureTag,
        #[command(flatten)]
        common: Common,
    },
    /// Top-k nodes of several measures side by side.
    Compare {
        input: PathBuf,
        #[arg(long, value_delimiter = ',', value_parser = parse_tag)]
        measures: Vec<MeasureTag>,
        #[command(flatten)]
        common: Common,
    },
    /// Density left after removing each measure's top-k nodes.
    Ablate {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long, value_delimiter = ',', value_parser = parse_tag)]
        measures: Vec<MeasureTag>,
        /// Append density-by-network series for plotting.
        #[arg(long)]
        plot_series: bool,
        /// Add a RANDOM row: mean density after removing k random nodes.
        #[arg(long, default_value_t = 0)]
        random_trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Node count, edge count, density and triangle count.
    Info {
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Clone)]
struct Common {
    #[arg(long, default_value_t = 5)]
    k: usize,
    /// Output format.
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,
    #[arg(long, value_enum, default_value = "auto")]
    input_format: InputArg,
    #[arg(long, default_value_t = Params::default().damping)]
    damping: f64,
    #[arg(long, default_value_t = Params::default().tol)]
    tol: f64,
    #[arg(long, default_value_t = Params::default().max_iter)]
    max_iter: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputArg {
    Pajek,
    Edgelist,
    Auto,
}

impl From<InputArg> for InputFormat {
    fn from(a: InputArg) -> Self {
        match a {
            InputArg::Pajek => InputFormat::Pajek,
            InputArg::Edgelist => InputFormat::EdgeList,
            InputArg::Auto => InputFormat::Auto,
        }
    }
}

fn parse_tag(s: &str) -> Result<MeasureTag, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

impl Common {
    fn params(&self) -> Params {
        Params {
            damping: self.damping,
            tol: self.tol,
            max_iter: self.max_iter,
        }
    }

    fn validate(&self) -> Result<(), Error> {
        if self.k == 0 {
            return Err(Error::Domain("--k must be at least 1".into()));
        }
        self.params().validate()
    }

    fn json(&self) -> Map<String, Value> {
        let mut m = Map::new();
        m.insert("k".into(), json!(self.k));
        m.insert("damping".into(), json!(self.damping));
        m.insert("tol".into(), json!(self.tol));
        m.insert("max_iter".into(), json!(self.max_iter));
        m
    }
}

fn graph_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn load(path: &Path, common: &Common) -> Result<Graph, Error> {
    io::load(path, common.input_format.into())
}

fn tag_list(tags: &[MeasureTag]) -> Value {
    json!(tags.iter().map(|t| t.name()).collect::<Vec<_>>())
}

fn cmd_rank(input: &Path, measure: MeasureTag, common: &Common) -> Result<Emission, Error> {
    common.validate()?;
    let g = load(input, common)?;
    let scores = compute(&g, measure, &common.params())?;
    let mut table = Table::new(["rank", "node", "score"]);
    for (i, node) in rank_top_k(&scores, common.k).into_iter().enumerate() {
        table.push(vec![
            Cell::Int(i as i64 + 1),
            Cell::Int(node.0),
            Cell::score(scores.get(node).unwrap()),
        ]);
    }
    let mut params = common.json();
    params.insert("measure".into(), json!(measure.name()));
    Ok(Emission {
        graph: graph_name(input),
        command: "rank",
        params,
        table,
        plot: None,
    })
}

fn cmd_compare(input: &Path, measures: &[MeasureTag], common: &Common) -> Result<Emission, Error> {
    common.validate()?;
    let g = load(input, common)?;
    let measures = if measures.is_empty() {
        MeasureTag::COMPARISON.to_vec()
    } else {
        measures.to_vec()
    };
    let name = graph_name(input);
    let t = experiments::ranking_table(&g, &name, common.k, &measures, &common.params())?;
    let mut table = Table::new(std::iter::once("rank").chain(measures.iter().map(|m| m.name())));
    let depth = t.columns.first().map_or(0, |(_, c)| c.len());
    for row in 0..depth {
        let mut cells = vec![Cell::Int(row as i64 + 1)];
        cells.extend(t.columns.iter().map(|(_, c)| Cell::Int(c[row].0)));
        table.push(cells);
    }
    let mut params = common.json();
    params.insert("measures".into(), tag_list(&measures));
    Ok(Emission {
        graph: name,
        command: "compare",
        params,
        table,
        plot: None,
    })
}

fn cmd_ablate(
    inputs: &[PathBuf],
    measures: &[MeasureTag],
    plot_series: bool,
    random_trials: usize,
    seed: u64,
    common: &Common,
) -> Result<Emission, Error> {
    common.validate()?;
    let measures = if measures.is_empty() {
        MeasureTag::COMPARISON.to_vec()
    } else {
        measures.to_vec()
    };
    let mut reports = Vec::new();
    let mut table = Table::new(["graph", "measure", "density", "removed"]);
    for input in inputs {
        let g = load(input, common)?;
        let name = graph_name(input);
        let report = experiments::removal_impact(&g, &name, common.k, &measures, &common.params())?;
        for row in &report.rows {
            let removed: Vec<String> = row.removed.iter().map(|n| n.to_string()).collect();
            table.push(vec![
                Cell::Text(name.clone()),
                Cell::Text(row.measure.name().into()),
                Cell::fixed4(row.density),
                Cell::Text(removed.join(" ")),
            ]);
        }
        if random_trials > 0 {
            let d = experiments::random_removal_density(&g, common.k, random_trials, seed)?;
            table.push(vec![
                Cell::Text(name.clone()),
                Cell::Text("RANDOM".into()),
                Cell::fixed4(d),
                Cell::Text(String::new()),
            ]);
        }
        reports.push(report);
    }

    let plot = if plot_series {
        let series = experiments::plot_series(&reports)?;
        let mut t = Table::new(
            ["network_index", "network"]
                .into_iter()
                .chain(series.series.iter().map(|(m, _)| m.name())),
        );
        for (col, (idx, name)) in series.x.iter().enumerate() {
            let mut cells = vec![Cell::Int(*idx as i64), Cell::Text(name.clone())];
            cells.extend(series.series.iter().map(|(_, s)| Cell::fixed4(s[col])));
            t.push(cells);
        }
        Some(t)
    } else {
        None
    };

    let mut params = common.json();
    params.insert("measures".into(), tag_list(&measures));
    if random_trials > 0 {
        params.insert("random_trials".into(), json!(random_trials));
        params.insert("seed".into(), json!(seed));
    }
    let names: Vec<String> = inputs.iter().map(|p| graph_name(p)).collect();
    Ok(Emission {
        graph: names.join(","),
        command: "ablate",
        params,
        table,
        plot,
    })
}

fn cmd_info(input: &Path, common: &Common) -> Result<Emission, Error> {
    let g = load(input, common)?;
    let mut table = Table::new(["nodes", "edges", "density", "triangles"]);
    let density = match g.density() {
        Ok(d) => Cell::score(d),
        Err(_) => Cell::Text("undefined".into()),
    };
    table.push(vec![
        Cell::Int(g.node_count() as i64),
        Cell::Int(g.edge_count() as i64),
        density,
        Cell::Int(triangle_count(&g) as i64),
    ]);
    Ok(Emission {
        graph: graph_name(input),
        command: "info",
        params: Map::new(),
        table,
        plot: None,
    })
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) | Error::Parse { .. } => 2,
        Error::Convergence { .. } => 3,
        Error::Domain(_) | Error::UnknownNode(_) | Error::Refused(_) | Error::Shape(_) => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, format) = match &cli.command {
        Command::Rank {
            input,
            measure,
            common,
        } => (cmd_rank(input, *measure, common), common.format),
        Command::Compare {
            input,
            measures,
            common,
        } => (cmd_compare(input, measures, common), common.format),
        Command::Ablate {
            inputs,
            measures,
            plot_series,
            random_trials,
            seed,
            common,
        } => (
            cmd_ablate(
                inputs,
                measures,
                *plot_series,
                *random_trials,
                *seed,
                common,
            ),
            common.format,
        ),
        Command::Info { input, common } => (cmd_info(input, common), common.format),
    };
    match result {
        Ok(emission) => {
            print!("{}", emission.render(format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("tricent: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
