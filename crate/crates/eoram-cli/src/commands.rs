//! Implementations of the non-repro subcommands.

use crate::io::{
    cache_dir_from_env, emit, load_any_graph, load_coloring_json, load_eog, load_matrix,
    load_plain, load_vog, load_word, parse_color, to_json_text,
};
use crate::{
    Command, ConstructCmd, GreedyCmd, MatrixCmd, OutOpt, ProbCmd, PwordsCmd, RamseyCmd,
    RamseyArgs,
};
use eoram_core::cert::{
    coloring_from_json, coloring_to_json, Certificate, ColoringJson, EogJson, GraphJson, HostJson,
};
use eoram_core::constructions::{
    canonical_complete, lex_bipartite, lex_complete, matching_eog, max_lex_complete,
    monotone_path_eog, monotone_path_vog, star_eog, CanonicalType,
};
use eoram_core::embed::{
    find_edge_ordered_embedding, find_graph_embedding, find_vertex_ordered_embedding, ColorFilter,
};
pub use eoram_core::embed::DEFAULT_COPY_CAP;
use eoram_core::graph::Coloring;
use eoram_core::greedy::{greedy_embed, host_for};
use eoram_core::matrices::{
    contains_pattern, lex_path_bound, max_weight_avoiding, path_pattern, path_weight_bound,
};
use eoram_core::paramwords::{compose, extract_f_star, verify_induced_copy, word_to_edge};
use eoram_core::probabilistic::{
    check_biclique_saturation, containment_probability_exact, containment_probability_mc,
    random_edge_ordering, saturation_feasibility, search_saturating_ordering,
};
use eoram_core::ramsey::{
    classic_ramsey, edge_ordered_ramsey, lex_ramsey, ordered_ramsey, AnyGraph, RamseyAnswer,
    RamseyConfig, RamseyValue,
};
use eoram_core::{Error, Graph, Result};
use rand::{Rng, SeedableRng};
use serde::Serialize;
use std::path::Path;

pub fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Construct(cmd) => construct(cmd),
        Command::Embed { pattern, host, coloring, color, out } => {
            embed(&pattern, &host, coloring.as_deref(), color.as_deref(), &out)
        }
        Command::Ramsey(cmd) => ramsey(cmd),
        Command::Greedy(cmd) => greedy(cmd),
        Command::Prob(cmd) => prob(cmd),
        Command::Matrix(cmd) => matrix(cmd),
        Command::Pwords(cmd) => pwords(cmd),
        Command::Verify { cert, copy_cap } => verify(&cert, copy_cap),
        Command::Repro { name, emit_certs } => crate::repro::run_named(&name, emit_certs),
    }
}

fn construct(cmd: ConstructCmd) -> Result<i32> {
    let (host, out) = match cmd {
        ConstructCmd::Lex { n, out } => (AnyGraph::EdgeOrdered(lex_complete(n)), out),
        ConstructCmd::MaxLex { n, out } => (AnyGraph::EdgeOrdered(max_lex_complete(n)), out),
        ConstructCmd::InverseLex { n, out } => (
            AnyGraph::EdgeOrdered(canonical_complete(CanonicalType::InverseLex, n)),
            out,
        ),
        ConstructCmd::InverseMaxLex { n, out } => (
            AnyGraph::EdgeOrdered(canonical_complete(CanonicalType::InverseMaxLex, n)),
            out,
        ),
        ConstructCmd::MonotonePath { n, out } => {
            (AnyGraph::EdgeOrdered(monotone_path_eog(n)), out)
        }
        ConstructCmd::MonotonePathVog { n, out } => {
            (AnyGraph::VertexOrdered(monotone_path_vog(n)), out)
        }
        ConstructCmd::Matching { n, out } => (AnyGraph::EdgeOrdered(matching_eog(n)?), out),
        ConstructCmd::Star { leaves, out } => (AnyGraph::EdgeOrdered(star_eog(leaves)), out),
        ConstructCmd::LexBipartite { a, b, out } => {
            (AnyGraph::EdgeOrdered(lex_bipartite(a, b)), out)
        }
        ConstructCmd::Random { n, seed, out } => (
            AnyGraph::EdgeOrdered(random_edge_ordering(&Graph::complete(n), seed)),
            out,
        ),
    };
    emit(&out.out, &to_json_text(&HostJson::from_any(&host)))?;
    Ok(0)
}

/// Rebuild a coloring whose JSON does not store the color count: any `k`
/// admitting all listed colors (and a required floor) is equivalent.
fn coloring_with_inferred_k(
    host: &AnyGraph,
    json: &ColoringJson,
    min_k: usize,
) -> Result<Coloring> {
    let k = json
        .colors
        .iter()
        .max()
        .map_or(0, |&m| usize::from(m) + 1)
        .max(min_k)
        .max(1);
    coloring_from_json(host, json, k)
}

fn find_embedding(
    pattern: &AnyGraph,
    host: &AnyGraph,
    filter: Option<&ColorFilter<'_>>,
) -> Result<Option<Vec<usize>>> {
    let found = match (host, pattern) {
        (AnyGraph::EdgeOrdered(h), AnyGraph::EdgeOrdered(p)) => {
            find_edge_ordered_embedding(p, h, filter)?
        }
        (AnyGraph::VertexOrdered(h), AnyGraph::VertexOrdered(p)) => {
            find_vertex_ordered_embedding(p, h, filter)?
        }
        (AnyGraph::Plain(h), AnyGraph::Plain(p)) => find_graph_embedding(p, h, filter)?,
        _ => {
            return Err(Error::KindMismatch {
                host: host.kind_name(),
                target: pattern.kind_name(),
            });
        }
    };
    Ok(found.map(|e| e.vertex_map))
}

fn embed(
    pattern_path: &Path,
    host_path: &Path,
    coloring_path: Option<&Path>,
    color: Option<&str>,
    out: &OutOpt,
) -> Result<i32> {
    let pattern = load_any_graph(pattern_path)?;
    let host = load_any_graph(host_path)?;
    let filter = match (coloring_path, color) {
        (Some(path), Some(color)) => {
            let color = parse_color(color)?;
            let json = load_coloring_json(path)?;
            let coloring = coloring_with_inferred_k(&host, &json, usize::from(color) + 1)?;
            Some((coloring, color))
        }
        (None, None) => None,
        _ => {
            return Err(Error::InvalidArgument(
                "--coloring and --color must be given together".into(),
            ));
        }
    };
    let found = find_embedding(
        &pattern,
        &host,
        filter
            .as_ref()
            .map(|(coloring, color)| ColorFilter { coloring, color: *color })
            .as_ref(),
    )?;
    match found {
        Some(vertex_map) => {
            let cert = Certificate::Embedding {
                pattern: HostJson::from_any(&pattern),
                host: HostJson::from_any(&host),
                vertex_map,
                coloring: filter
                    .as_ref()
                    .map(|(coloring, _)| coloring_to_json(&host, coloring)),
                color: filter.as_ref().map(|&(_, color)| color),
            };
            emit(&out.out, &cert.to_json())?;
            Ok(0)
        }
        None => {
            eprintln!("no embedding found");
            Ok(3)
        }
    }
}

#[derive(Serialize)]
struct RamseyResultJson {
    value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    searched_to: Option<usize>,
}

/// Write one bad coloring per refuted host size, plus the final arrowing
/// certificate, into `dir`.
fn write_ramsey_certs(dir: &Path, answer: &RamseyAnswer, targets: &[&AnyGraph]) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let target_json: Vec<HostJson> = targets.iter().map(|t| HostJson::from_any(t)).collect();
    let mut seen = std::collections::BTreeSet::new();
    for lower in &answer.lower {
        if !seen.insert(lower.n) {
            continue;
        }
        let cert = Certificate::BadColoring {
            host: HostJson::from_any(&lower.host),
            targets: target_json.clone(),
            colors: coloring_to_json(&lower.host, &lower.coloring),
        };
        std::fs::write(dir.join(format!("lower-n{}.json", lower.n)), cert.to_json())?;
    }
    if let Some(upper) = &answer.upper {
        let cert = Certificate::Arrowing {
            host: HostJson::from_any(&upper.host),
            targets: target_json,
            stats: upper.stats,
        };
        std::fs::write(dir.join(format!("upper-n{}.json", upper.n)), cert.to_json())?;
    }
    Ok(())
}

fn report_answer(answer: &RamseyAnswer, args: &RamseyArgs, targets: &[&AnyGraph]) -> Result<i32> {
    if let Some(dir) = &args.emit_certs {
        write_ramsey_certs(dir, answer, targets)?;
    }
    let json = match answer.value {
        RamseyValue::Determined(v) => RamseyResultJson { value: Some(v), searched_to: None },
        RamseyValue::Unknown { searched_to } => {
            RamseyResultJson { value: None, searched_to: Some(searched_to) }
        }
    };
    print!("{}", to_json_text(&json));
    Ok(if json.value.is_some() { 0 } else { 4 })
}

fn ramsey_config(args: &RamseyArgs) -> RamseyConfig {
    RamseyConfig {
        max_host: args.max_host,
        copy_cap: args.copy_cap,
        collect_certs: args.emit_certs.is_some(),
        cache_dir: cache_dir_from_env(),
        class_vertex_cap: args.class_cap,
    }
}

fn ramsey(cmd: RamseyCmd) -> Result<i32> {
    match cmd {
        RamseyCmd::Lex(args) => {
            let red = load_eog(&args.target)?;
            let blue = args.blue_target.as_deref().map(load_eog).transpose()?;
            let answer = lex_ramsey(&red, blue.as_ref(), &ramsey_config(&args))?;
            let (red, blue) = (
                AnyGraph::EdgeOrdered(red.clone()),
                AnyGraph::EdgeOrdered(blue.unwrap_or(red)),
            );
            report_answer(&answer, &args, &[&red, &blue])
        }
        RamseyCmd::Ordered(args) => {
            let red = load_vog(&args.target)?;
            let blue = args.blue_target.as_deref().map(load_vog).transpose()?;
            let answer = ordered_ramsey(&red, blue.as_ref(), &ramsey_config(&args))?;
            let (red, blue) = (
                AnyGraph::VertexOrdered(red.clone()),
                AnyGraph::VertexOrdered(blue.unwrap_or(red)),
            );
            report_answer(&answer, &args, &[&red, &blue])
        }
        RamseyCmd::Classic(args) => {
            let red = load_plain(&args.target)?;
            let blue = args.blue_target.as_deref().map(load_plain).transpose()?;
            let answer = classic_ramsey(&red, blue.as_ref(), &ramsey_config(&args))?;
            let (red, blue) =
                (AnyGraph::Plain(red.clone()), AnyGraph::Plain(blue.unwrap_or(red)));
            report_answer(&answer, &args, &[&red, &blue])
        }
        RamseyCmd::Edge(args) => {
            let red = load_eog(&args.target)?;
            let blue = args.blue_target.as_deref().map(load_eog).transpose()?;
            let answer = edge_ordered_ramsey(&red, blue.as_ref(), &ramsey_config(&args))?;
            let (red, blue) = (
                AnyGraph::EdgeOrdered(red.clone()),
                AnyGraph::EdgeOrdered(blue.unwrap_or(red)),
            );
            report_answer(&answer, &args, &[&red, &blue])
        }
    }
}

#[derive(Serialize)]
struct InstanceJson {
    n_host: usize,
    d: usize,
    t: usize,
    order: Vec<usize>,
    parts: Vec<Vec<usize>>,
}

/// Wrap a greedy run into a self-contained certificate.
fn greedy_certificate(
    inst: &eoram_core::greedy::GreedyInstance,
    coloring: &Coloring,
    witness: eoram_core::greedy::GreedyCertificate,
) -> Certificate {
    Certificate::Greedy {
        h: GraphJson::from_graph(inst.h()),
        order: inst.order().to_vec(),
        d: inst.d(),
        t: inst.t(),
        parts: inst.parts().to_vec(),
        coloring: ColoringJson { colors: coloring.colors().to_vec() },
        witness,
    }
}

fn greedy(cmd: GreedyCmd) -> Result<i32> {
    match cmd {
        GreedyCmd::Embed { h, t, coloring, out } => {
            let inst = host_for(&load_plain(&h)?, t)?;
            let json = load_coloring_json(&coloring)?;
            let coloring = Coloring::new(2, json.colors)?;
            let witness = greedy_embed(&inst, &coloring)?;
            let cert = greedy_certificate(&inst, &coloring, witness);
            emit(&out.out, &cert.to_json())?;
            Ok(0)
        }
        GreedyCmd::Instance { h, t, out } => {
            let inst = host_for(&load_plain(&h)?, t)?;
            let json = InstanceJson {
                n_host: inst.n_host(),
                d: inst.d(),
                t: inst.t(),
                order: inst.order().to_vec(),
                parts: inst.parts().to_vec(),
            };
            emit(&out.out, &to_json_text(&json))?;
            Ok(0)
        }
        GreedyCmd::SampleColoring { h, t, seed, blue_bias, out } => {
            let inst = host_for(&load_plain(&h)?, t)?;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let colors: Vec<u8> = (0..inst.host_edge_count())
                .map(|_| {
                    if rng.gen_bool(blue_bias) {
                        eoram_core::BLUE
                    } else {
                        eoram_core::RED
                    }
                })
                .collect();
            emit(&out.out, &to_json_text(&ColoringJson { colors }))?;
            Ok(0)
        }
        GreedyCmd::Verify { cert } => {
            let cert = Certificate::from_json(&crate::io::read_text(&cert)?)?;
            if !matches!(cert, Certificate::Greedy { .. }) {
                return Err(Error::InvalidArgument(
                    "expected a greedy certificate".into(),
                ));
            }
            cert.verify(DEFAULT_COPY_CAP, None)?;
            println!("{{\"verified\":true}}");
            Ok(0)
        }
    }
}

#[derive(Serialize)]
struct ExactProbabilityJson {
    numerator: u64,
    denominator: u64,
    value: f64,
}

fn prob(cmd: ProbCmd) -> Result<i32> {
    match cmd {
        ProbCmd::Exact { pattern, host } => {
            let p = containment_probability_exact(&load_eog(&pattern)?, &load_plain(&host)?)?;
            let json = ExactProbabilityJson {
                numerator: *p.numer(),
                denominator: *p.denom(),
                value: *p.numer() as f64 / *p.denom() as f64,
            };
            print!("{}", to_json_text(&json));
            Ok(0)
        }
        ProbCmd::Mc { pattern, host, trials, seed } => {
            let estimate = containment_probability_mc(
                &load_eog(&pattern)?,
                &load_plain(&host)?,
                trials,
                seed,
            )?;
            print!("{}", to_json_text(&estimate));
            Ok(0)
        }
        ProbCmd::Saturate { ordering, pattern, t, cap } => {
            let outcome =
                check_biclique_saturation(&load_eog(&ordering)?, &load_eog(&pattern)?, t, cap)?;
            print!("{}", to_json_text(&outcome));
            Ok(if outcome.saturated { 0 } else { 3 })
        }
        ProbCmd::Search { side, pattern, t, restarts, seed, cap, out } => {
            let pattern = load_eog(&pattern)?;
            match search_saturating_ordering(side, &pattern, t, restarts, seed, cap)? {
                Some(ordering) => {
                    let cert = Certificate::SaturatingOrdering {
                        side,
                        pattern: EogJson::from_graph(&pattern),
                        t,
                        ordering: EogJson::from_graph(&ordering),
                    };
                    emit(&out.out, &cert.to_json())?;
                    Ok(0)
                }
                None => {
                    eprintln!("no saturating ordering found in {restarts} restarts");
                    Ok(3)
                }
            }
        }
        ProbCmd::Feasible { n, m, t, side } => {
            let report = saturation_feasibility(n, m, t, side)?;
            print!("{}", to_json_text(&report));
            Ok(0)
        }
    }
}

#[derive(Serialize)]
struct BoundJson<T: Serialize> {
    bound: T,
}

fn matrix(cmd: MatrixCmd) -> Result<i32> {
    match cmd {
        MatrixCmd::Contains { a, pattern } => {
            let contained = contains_pattern(&load_matrix(&a)?, &load_matrix(&pattern)?);
            println!("{{\"contained\":{contained}}}");
            Ok(if contained { 0 } else { 3 })
        }
        MatrixCmd::Pattern { n, out } => {
            let m = path_pattern(n)?;
            emit(
                &out.out,
                &to_json_text(&eoram_core::cert::MatrixJson::from_matrix(&m)),
            )?;
            Ok(0)
        }
        MatrixCmd::Bound { n, big_n } => {
            let bound = path_weight_bound(n, big_n)?;
            print!("{}", to_json_text(&BoundJson { bound }));
            Ok(0)
        }
        MatrixCmd::LexBound { n } => {
            let bound = lex_path_bound(n)?;
            print!("{}", to_json_text(&BoundJson { bound }));
            Ok(0)
        }
        MatrixCmd::Oracle { pattern, rows, cols } => {
            let max_ones = max_weight_avoiding(&load_matrix(&pattern)?, rows, cols)?;
            println!("{{\"max_ones\":{max_ones}}}");
            Ok(0)
        }
    }
}

#[derive(Serialize)]
struct EdgeJson {
    x: Vec<usize>,
    y: Vec<usize>,
}

#[derive(Serialize)]
struct CopyReportJson {
    color: Option<u8>,
    sets: Vec<Vec<usize>>,
    vertex_order_ok: bool,
    edges_ok: bool,
    edge_order_ok: bool,
    colors_ok: bool,
    all_ok: bool,
}

/// Parse a subset-host coloring rule: `parity` colors an edge by the parity
/// of the least shared element, `constant:<c>` ignores the edge.
fn parse_chi(rule: &str) -> Result<Box<dyn Fn(&[usize], &[usize]) -> u8 + Sync>> {
    if rule == "parity" {
        return Ok(Box::new(|x: &[usize], y: &[usize]| {
            let min_shared = x.iter().find(|v| y.contains(v)).copied().unwrap_or(0);
            (min_shared % 2) as u8
        }));
    }
    if let Some(c) = rule.strip_prefix("constant:") {
        let c: u8 = c
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad constant color {c:?}")))?;
        return Ok(Box::new(move |_: &[usize], _: &[usize]| c));
    }
    Err(Error::InvalidArgument(format!(
        "unknown coloring rule {rule:?}; expected `parity` or `constant:<c>`"
    )))
}

fn pwords(cmd: PwordsCmd) -> Result<i32> {
    match cmd {
        PwordsCmd::Compose { f, g, out } => {
            let composed = compose(&load_word(&f, false)?, &load_word(&g, false)?)?;
            emit(
                &out.out,
                &to_json_text(&eoram_core::cert::WordJson::from_word(&composed)),
            )?;
            Ok(0)
        }
        PwordsCmd::Edge { word } => {
            let (x, y) = word_to_edge(&load_word(&word, false)?)?;
            print!("{}", to_json_text(&EdgeJson { x, y }));
            Ok(0)
        }
        PwordsCmd::Extract { word, target } => {
            let sets = extract_f_star(&load_word(&word, false)?, &load_eog(&target)?)?;
            print!("{}", to_json_text(&serde_json::json!({ "sets": sets })));
            Ok(0)
        }
        PwordsCmd::Verify { word, target, ground, chi, relaxed } => {
            let chi = parse_chi(&chi)?;
            let report = verify_induced_copy(
                ground,
                &load_eog(&target)?,
                &load_word(&word, relaxed)?,
                &*chi,
            )?;
            let json = CopyReportJson {
                color: report.color,
                sets: report.sets.clone(),
                vertex_order_ok: report.vertex_order_ok,
                edges_ok: report.edges_ok,
                edge_order_ok: report.edge_order_ok,
                colors_ok: report.colors_ok,
                all_ok: report.all_ok(),
            };
            print!("{}", to_json_text(&json));
            Ok(if report.all_ok() { 0 } else { 5 })
        }
    }
}

fn verify(cert_path: &Path, copy_cap: u64) -> Result<i32> {
    let cert = Certificate::from_json(&crate::io::read_text(cert_path)?)?;
    cert.verify(copy_cap, cache_dir_from_env().as_deref())?;
    println!("{{\"verified\":true}}");
    Ok(0)
}
