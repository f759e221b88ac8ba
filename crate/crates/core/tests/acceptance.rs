//! Acceptance suite. Runs every criterion, prints one status line per
//! criterion and exits non-zero if any criterion fails.
//!
//! The dolphins, blogs and USAir97 networks are not bundled. Put
//! `dolphins.net`, `blogs.net` and `USAir97.net` in `data/` at the workspace
//! root (or in the directory named by `TRICENT_DATA_DIR`) to include them.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tricent_core::centrality::{
    betweenness_centrality, eigenvector_centrality, pagerank, sdeg, tr_centrality, tr_score,
};
use tricent_core::datasets::karate_club;
use tricent_core::experiments::{comparison_table, rank_top_k, removal_impact};
use tricent_core::oracle::{oracle_betweenness, oracle_triangles};
use tricent_core::triangles::{triangle_count, triangles_at};
use tricent_core::{compute, generate, io, Graph, MeasureTag, NodeId, Params};

const SEED: u64 = 0xAC_CE97;

#[derive(Clone, Copy, PartialEq)]
enum Status {
    Pass,
    Fail,
    Skip,
}

struct Report {
    status: Status,
    notes: Vec<String>,
}

impl Report {
    fn new() -> Self {
        Report {
            status: Status::Pass,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        if ok {
            self.notes.push(format!("ok    {what}"));
        } else {
            self.status = Status::Fail;
            self.notes.push(format!("FAIL  {what}"));
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(format!("note  {}", what.into()));
    }
}

fn ids(v: &[i64]) -> Vec<NodeId> {
    v.iter().map(|&x| NodeId(x)).collect()
}

fn fmt_ids(v: &[NodeId]) -> String {
    let s: Vec<String> = v.iter().map(|n| n.to_string()).collect();
    format!("({})", s.join(","))
}

fn round4(x: f64) -> f64 {
    (x * 1e4).round() / 1e4
}

fn data_dir() -> PathBuf {
    std::env::var_os("TRICENT_DATA_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data"))
}

fn find_dataset(stem: &str) -> Option<PathBuf> {
    let want = format!("{stem}.net").to_ascii_lowercase();
    std::fs::read_dir(data_dir())
        .ok()?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .find(|p| {
            p.file_name()
                .and_then(|f| f.to_str())
                .is_some_and(|f| f.to_ascii_lowercase() == want)
        })
}

struct PaperNetwork {
    stem: &'static str,
    nodes: usize,
    edges: usize,
    tc_density: f64,
}

const OTHER_NETWORKS: [PaperNetwork; 3] = [
    PaperNetwork {
        stem: "dolphins",
        nodes: 62,
        edges: 159,
        tc_density: 0.0695,
    },
    PaperNetwork {
        stem: "blogs",
        nodes: 112,
        edges: 425,
        tc_density: 0.0480,
    },
    PaperNetwork {
        stem: "USAir97",
        nodes: 332,
        edges: 2126,
        tc_density: 0.0298,
    },
];

fn criterion_1() -> Report {
    let mut r = Report::new();
    let start = Instant::now();
    let g = karate_club();
    let table = comparison_table(&g, "karate", 5, &Params::default()).unwrap();
    let elapsed = start.elapsed();
    let expected = [
        (MeasureTag::Tc, ids(&[1, 34, 33, 2, 3])),
        (MeasureTag::Tr, ids(&[1, 34, 33, 2, 3])),
        (MeasureTag::Bc, ids(&[1, 34, 33, 3, 32])),
        (MeasureTag::Cnc, ids(&[1, 3, 34, 32, 9])),
        (MeasureTag::Ec, ids(&[34, 1, 3, 33, 2])),
        (MeasureTag::Pr, ids(&[34, 1, 33, 2, 3])),
    ];
    for (tag, want) in expected {
        let got = table.column(tag).unwrap();
        r.check(
            got == want.as_slice(),
            format!(
                "{tag:<3} top-5 {} (expected {})",
                fmt_ids(got),
                fmt_ids(&want)
            ),
        );
    }
    r.check(
        elapsed < Duration::from_secs(1),
        format!("runtime {elapsed:?} < 1s"),
    );
    r
}

fn criterion_2() -> Report {
    let mut r = Report::new();
    let start = Instant::now();
    let p = Params::default();
    let g = karate_club();
    let report = removal_impact(&g, "karate", 5, &MeasureTag::COMPARISON, &p).unwrap();
    let expected = [
        (MeasureTag::Tc, 0.0468),
        (MeasureTag::Tr, 0.0468),
        (MeasureTag::Bc, 0.0567),
        (MeasureTag::Cnc, 0.0739),
        (MeasureTag::Ec, 0.0468),
        (MeasureTag::Pr, 0.0468),
    ];
    for (tag, want) in expected {
        let got = round4(report.density(tag).unwrap());
        r.check(
            (got - want).abs() <= 0.0005 + 1e-12,
            format!("karate {tag:<3} residual density {got:.4} (expected {want:.4} ±0.0005)"),
        );
    }

    for net in &OTHER_NETWORKS {
        let Some(path) = find_dataset(net.stem) else {
            r.note(format!(
                "{} not found in {}; skipped",
                net.stem,
                data_dir().display()
            ));
            continue;
        };
        let g = match io::load(&path, io::InputFormat::Pajek) {
            Ok(g) => g,
            Err(e) => {
                r.check(false, format!("{}: {e}", path.display()));
                continue;
            }
        };
        let same_version = g.node_count() == net.nodes && g.edge_count() == net.edges;
        let got = removal_impact(&g, net.stem, 5, &[MeasureTag::Tc], &p)
            .map(|rep| round4(rep.density(MeasureTag::Tc).unwrap()));
        let line = format!(
            "{} TC residual density {:?} (expected {:.4}); file has {} nodes / {} edges, paper {} / {}",
            net.stem,
            got,
            net.tc_density,
            g.node_count(),
            g.edge_count(),
            net.nodes,
            net.edges
        );
        let ok = got
            .as_ref()
            .is_ok_and(|d| (d - net.tc_density).abs() <= 0.0005 + 1e-12);
        if ok || same_version {
            r.check(ok, line);
        } else {
            r.note(format!("dataset version differs, logged only: {line}"));
        }
    }
    let elapsed = start.elapsed();
    r.check(
        elapsed < Duration::from_secs(10),
        format!("runtime {elapsed:?} < 10s"),
    );
    r
}

fn criterion_3() -> Report {
    let mut r = Report::new();
    let tol = 1e-12;
    for (n, want) in [(3, 0.05), (4, 0.10)] {
        let tc = tr_centrality(&generate::complete(n));
        r.check(
            tc.values().all(|v| (v - want).abs() < tol),
            format!("K{n}: every node scores {want}"),
        );
    }
    // node 1 of the worked example: sdeg 2, one triangle
    let one = Graph::from_edge_list([(1, 2), (1, 3), (2, 3)]);
    let got = tr_centrality(&one).get(NodeId(1)).unwrap();
    r.check(
        (got - 0.05).abs() < tol,
        format!("sdeg 2 / 1 triangle node: {got} = 5 * 0.01"),
    );
    // node 9 of the worked example: sdeg 3, two triangles
    let nine = Graph::from_edge_list([(9, 1), (9, 2), (9, 3), (1, 2), (2, 3)]);
    let got = tr_centrality(&nine).get(NodeId(9)).unwrap();
    r.check(
        (got - 0.09).abs() < tol,
        format!("sdeg 3 / 2 triangle node: {got} = 9 * 0.01"),
    );
    let path = generate::path(3);
    let got = tr_centrality(&path).get(NodeId(2)).unwrap();
    r.check(
        (got + 0.02).abs() < tol,
        format!("triangle-free node: {got} = -0.02"),
    );

    // per-node (sdeg, triangles) of the nine-node example and its TC ranking
    let table2 = [
        (1, 2, 1),
        (2, 3, 2),
        (3, 6, 5),
        (4, 2, 1),
        (5, 1, 0),
        (6, 4, 3),
        (7, 4, 3),
        (8, 2, 1),
        (9, 3, 2),
    ];
    let table3 = [6, 4, 1, 7, 9, 2, 3, 8, 5];
    let scores = tricent_core::ScoreVector::from_pairs(
        MeasureTag::Tc,
        table2
            .iter()
            .map(|&(v, s, nt)| (NodeId(v), tr_score(s, s + 1, nt, 2 * (s + nt)))),
    );
    let order = rank_top_k(&scores, 9);
    let ranks: Vec<usize> = (1..=9)
        .map(|v| order.iter().position(|&n| n == NodeId(v)).unwrap() + 1)
        .collect();
    r.check(
        ranks == table3,
        format!("nine-node example ranks {ranks:?} (expected {table3:?})"),
    );
    r
}

fn criterion_4() -> Report {
    let mut r = Report::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut tri_ok = true;
    for _ in 0..60 {
        let n = rng.gen_range(3..=50);
        let p = rng.gen_range(0.05..0.5);
        let g = generate::gnp(n, p, &mut rng);
        let oracle = oracle_triangles(&g).unwrap();
        tri_ok &= g
            .nodes()
            .iter()
            .all(|&v| triangles_at(&g, v).unwrap() == oracle[&v]);
    }
    r.check(
        tri_ok,
        "triangles_at equals triple enumeration on 60 random graphs (n <= 50)",
    );

    let mut worst = 0.0f64;
    for _ in 0..60 {
        let n = rng.gen_range(3..=8);
        let p = rng.gen_range(0.0..0.6);
        let g = generate::connected_gnp(n, p, &mut rng);
        let fast = betweenness_centrality(&g);
        let slow = oracle_betweenness(&g).unwrap();
        for (&(_, a), &(_, b)) in fast.entries().iter().zip(slow.entries()) {
            worst = worst.max((a - b).abs());
        }
    }
    r.check(
        worst < 1e-9,
        format!(
            "betweenness vs path enumeration on 60 connected graphs (n <= 8): max diff {worst:e}"
        ),
    );
    r
}

fn permuted_equal(
    a: &tricent_core::ScoreVector,
    b: &tricent_core::ScoreVector,
    map: &[(NodeId, NodeId)],
    tol: f64,
) -> bool {
    map.iter()
        .all(|&(from, to)| (a.get(from).unwrap() - b.get(to).unwrap()).abs() <= tol)
}

fn criterion_5() -> Report {
    let mut r = Report::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let params = Params::default();

    let mut sdeg_ok = true;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=64);
        let g = generate::gnp(n, rng.gen_range(0.0..0.4), &mut rng);
        sdeg_ok &= g
            .nodes()
            .iter()
            .all(|&v| sdeg(&g, v).unwrap() <= g.degree(v).unwrap());
    }
    r.check(sdeg_ok, "sdeg <= degree on 1000 random graphs (n <= 64)");

    let mut sum_ok = true;
    for _ in 0..100 {
        let g = generate::gnp(rng.gen_range(3..=50), rng.gen_range(0.05..0.6), &mut rng);
        let incident: usize = g
            .nodes()
            .iter()
            .map(|&v| triangles_at(&g, v).unwrap())
            .sum();
        let oracle_total: usize = oracle_triangles(&g).unwrap().values().sum();
        sum_ok &= incident == 3 * triangle_count(&g) && incident == oracle_total;
    }
    r.check(
        sum_ok,
        "sum of incident triangles = 3 x triangle count on 100 random graphs",
    );

    for tag in MeasureTag::ALL {
        let exact = matches!(
            tag,
            MeasureTag::Tc | MeasureTag::Tr | MeasureTag::Dc | MeasureTag::Sdeg
        );
        let tol = if exact { 0.0 } else { 1e-9 };
        let mut ok = true;
        for trial in 0..25 {
            let g = if trial == 0 {
                karate_club()
            } else {
                generate::connected_gnp(rng.gen_range(5..=40), 0.15, &mut rng)
            };
            let (h, map) = generate::shuffle_labels(&g, &mut rng);
            ok &= permuted_equal(
                &compute(&g, tag, &params).unwrap(),
                &compute(&h, tag, &params).unwrap(),
                &map,
                tol,
            );
        }
        r.check(
            ok,
            format!("{tag} invariant under 25 random relabellings (tol {tol:e})"),
        );
    }

    let mut scale_ok = true;
    for _ in 0..50 {
        let g = generate::gnp(rng.gen_range(2..=40), 0.2, &mut rng);
        let factor = rng.gen_range(1e-4..1e4);
        for tag in MeasureTag::COMPARISON {
            let s = compute(&g, tag, &params).unwrap();
            scale_ok &= rank_top_k(&s, 5) == rank_top_k(&s.scaled(factor), 5);
        }
    }
    r.check(scale_ok, "positive rescaling leaves rank_top_k unchanged");

    let (mut pr_worst, mut ec_worst) = (0.0f64, 0.0f64);
    for trial in 0..50 {
        let g = if trial == 0 {
            karate_club()
        } else {
            generate::connected_gnp(rng.gen_range(2..=60), 0.1, &mut rng)
        };
        let pr = pagerank(&g, params.damping, params.tol, params.max_iter).unwrap();
        pr_worst = pr_worst.max((pr.values().sum::<f64>() - 1.0).abs());
        let ec = eigenvector_centrality(&g, params.tol, params.max_iter).unwrap();
        let x: Vec<f64> = ec.values().collect();
        let ax: Vec<f64> = g
            .nodes()
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .unwrap()
                    .iter()
                    .map(|&u| ec.get(u).unwrap())
                    .sum()
            })
            .collect();
        let lambda: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        let res = ax
            .iter()
            .zip(&x)
            .map(|(a, v)| (a - lambda * v).abs())
            .fold(0.0, f64::max);
        ec_worst = ec_worst.max(res);
    }
    r.check(
        pr_worst < params.tol,
        format!("PageRank sums to 1 (worst deviation {pr_worst:e})"),
    );
    r.check(
        ec_worst < params.tol,
        format!("eigenvector residual below tol (worst {ec_worst:e})"),
    );
    r
}

fn criterion_6() -> Report {
    let mut r = Report::new();
    let Some(path) = find_dataset("blogs") else {
        r.status = Status::Skip;
        r.note(format!("blogs.net not found in {}", data_dir().display()));
        return r;
    };
    let g = match io::load(&path, io::InputFormat::Pajek) {
        Ok(g) => g,
        Err(e) => {
            r.check(false, format!("{}: {e}", path.display()));
            return r;
        }
    };
    let table = comparison_table(&g, "blogs", 2, &Params::default()).unwrap();
    let same_version = g.node_count() == 112 && g.edge_count() == 425;
    for (tag, col) in &table.columns {
        let line = format!("blogs {tag:<3} starts {} (expected (18,3))", fmt_ids(col));
        let ok = col.as_slice() == ids(&[18, 3]).as_slice();
        if ok || same_version {
            r.check(ok, line);
        } else {
            r.note(format!(
                "dataset version differs ({} nodes / {} edges), logged only: {line}",
                g.node_count(),
                g.edge_count()
            ));
        }
    }
    r
}

type Criterion = (&'static str, fn() -> Report);

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("1 karate golden top-5 ranks", criterion_1),
        ("2 density ablation", criterion_2),
        ("3 worked-example consistency", criterion_3),
        ("4 oracle equivalence", criterion_4),
        ("5 property suites", criterion_5),
        ("6 blogs first-two agreement", criterion_6),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let report = run();
        let tag = match report.status {
            Status::Pass => "PASS",
            Status::Fail => {
                failed += 1;
                "FAIL"
            }
            Status::Skip => "SKIP",
        };
        println!("[{tag}] criterion {name}");
        for n in &report.notes {
            println!("         {n}");
        }
    }
    if failed > 0 {
        println!("acceptance: {failed} criterion/criteria failed");
        ExitCode::FAILURE
    } else {
        println!("acceptance: all criteria passed or skipped");
        ExitCode::SUCCESS
    }
}
