//! One function per subcommand. Each returns a JSON payload plus the text
//! shown without `--json`.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use graphsym::{
    automorphisms_from_generating_cycles, candidate_generating_cycles, catalog, catalog_names, cayley_table_ordered, coset_order,
    edge_weights, enumerate_automorphisms, enumerate_cycle_covers, enumerate_isometric_cycles_with, fingerprint_equal,
    find_klein_four, parse_any, parse_permutation, true_orbits, verify_permutation, weight_classes, CycleRule, EnumOptions,
    Format, GeneratingCycle, Graph, Permutation, SpectralOptions,
};
use serde_json::{json, Value};

use crate::args::{ExportFormat, GraphSource, Method, Rule};

/// Elements listed without `--full`.
const PREVIEW: usize = 24;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Lib(#[from] graphsym::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Io { .. } => 2,
            CliError::Lib(e) if e.is_budget() => 4,
            CliError::Lib(graphsym::Error::BadPermutation(_) | graphsym::Error::NotABijection(_)) => 1,
            CliError::Lib(_) => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub struct Output {
    pub graph: Value,
    pub params: Value,
    pub result: Value,
    pub text: String,
    /// Exit code 3: the computation worked and the answer is no.
    pub negative: bool,
    /// Exit code 4 after printing: a partial answer.
    pub truncated: bool,
}

impl Output {
    fn new(graph: Value, params: Value, result: Value, text: String) -> Self {
        Output { graph, params, result, text, negative: false, truncated: false }
    }
}

pub struct Loaded {
    pub graph: Graph,
    pub source: String,
}

impl Loaded {
    fn describe(&self) -> Value {
        json!({ "name": self.graph.name(), "source": self.source, "n": self.graph.n(), "m": self.graph.m() })
    }
}

fn read_file(path: &Path) -> CliResult<Graph> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
    Ok(parse_any(&text)?)
}

pub fn load(src: &GraphSource) -> CliResult<Loaded> {
    match (&src.name, &src.graph) {
        (Some(name), _) => Ok(Loaded { graph: catalog(name)?, source: "catalog".into() }),
        (None, Some(path)) => Ok(Loaded { graph: read_file(path)?, source: path.display().to_string() }),
        (None, None) => Err(CliError::Usage("one of --name or --graph is required".into())),
    }
}

/// A catalog name if there is one, else a file path.
fn load_either(arg: &str) -> CliResult<Loaded> {
    if catalog_names().any(|n| n == arg) {
        Ok(Loaded { graph: catalog(arg)?, source: "catalog".into() })
    } else {
        Ok(Loaded { graph: read_file(Path::new(arg))?, source: arg.to_owned() })
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("plain data serializes")
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes") + "\n"
}

fn notation(ps: &[Permutation]) -> Vec<String> {
    ps.iter().map(|p| p.cycle_notation(false)).collect()
}

fn list_elements(text: &mut String, ps: &[Permutation], full: bool) {
    let shown = if full { ps.len() } else { ps.len().min(PREVIEW) };
    for p in &ps[..shown] {
        let _ = writeln!(text, "  {}", p.cycle_notation(false));
    }
    if shown < ps.len() {
        let _ = writeln!(text, "  ... {} more (use --full)", ps.len() - shown);
    }
}

fn cycle_line(q: &GeneratingCycle) -> String {
    let verts: Vec<String> = q.cycle.vertices.iter().map(|v| v.to_string()).collect();
    let mut s = format!("{:?} <{}>", q.cycle.edges, verts.join(" "));
    if let Some(k) = q.symmetry {
        let _ = write!(s, " symmetry {k}");
    }
    let prods: Vec<String> = q
        .producers
        .iter()
        .map(|p| p.iter().map(|i| format!("c{i}")).collect::<Vec<_>>().join("+"))
        .collect();
    let _ = write!(s, " from {}", prods.join(" | "));
    s
}

pub fn catalog_cmd(name: Option<&str>, export: Option<ExportFormat>) -> CliResult<Output> {
    if let Some(name) = name {
        let g = catalog(name)?;
        let fmt = match export.unwrap_or(ExportFormat::Edgelist) {
            ExportFormat::Edgelist => Format::EdgeList,
            ExportFormat::Json => Format::Json,
            ExportFormat::Dot => Format::Dot,
        };
        let text = g.export(fmt);
        let result = json!({ "name": name, "n": g.n(), "edges": g.edges() });
        return Ok(Output::new(json!(name), json!({}), result, text));
    }
    let mut text = String::new();
    let mut rows = Vec::new();
    for name in catalog_names() {
        let g = catalog(name)?;
        let _ = writeln!(text, "{name:<14} n={:<3} m={}", g.n(), g.m());
        rows.push(json!({ "name": name, "n": g.n(), "m": g.m() }));
    }
    Ok(Output::new(Value::Null, json!({}), Value::Array(rows), text))
}

pub fn invariants(src: &GraphSource) -> CliResult<Output> {
    let l = load(src)?;
    let result = to_value(&edge_weights(&l.graph));
    let text = pretty(&result);
    Ok(Output::new(l.describe(), json!({}), result, text))
}

fn iso_set(g: &Graph, rule: Rule) -> CliResult<graphsym::IsometricCycleSet> {
    Ok(enumerate_isometric_cycles_with(g, EnumOptions { rule: CycleRule::from(rule), ..Default::default() })?)
}

fn rule_name(rule: Rule) -> &'static str {
    match rule {
        Rule::Relevant => "relevant",
        Rule::Isometric => "isometric",
    }
}

pub fn isocycles(src: &GraphSource, rule: Rule, count_only: bool) -> CliResult<Output> {
    let l = load(src)?;
    let s = iso_set(&l.graph, rule)?;
    let params = json!({ "rule": rule_name(rule), "count_only": count_only });
    if count_only {
        return Ok(Output::new(l.describe(), params, json!(s.count()), format!("{}\n", s.count())));
    }
    let result = to_value(&s.cycles);
    let text = pretty(&result);
    Ok(Output::new(l.describe(), params, result, text))
}

pub fn gencycles(src: &GraphSource, k: Option<usize>, len: usize, max_subset: usize, rule: Rule, budget: u64) -> CliResult<Output> {
    let l = load(src)?;
    let g = &l.graph;
    let s = iso_set(g, rule)?;
    let mut text = String::new();
    if let Some(k) = k {
        if k == 0 {
            return Err(CliError::Usage("--k must be at least 1".into()));
        }
        let r = enumerate_cycle_covers(g, &s, k, len, budget)?;
        let params = json!({ "k": k, "len": len, "rule": rule_name(rule), "budget": budget });
        let _ = writeln!(text, "covering subsets: {}", r.covering);
        let _ = writeln!(text, "configurations: {}", r.configurations.len());
        let _ = writeln!(text, "generating cycles: {}", r.generating.len());
        for q in &r.generating {
            let _ = writeln!(text, "  {}", cycle_line(q));
        }
        return Ok(Output::new(l.describe(), params, to_value(&r), text));
    }
    if max_subset == 0 {
        return Err(CliError::Usage("--max-subset must be at least 1".into()));
    }
    let part = weight_classes(g, &edge_weights(g));
    let c = candidate_generating_cycles(g, &s, &part, max_subset, budget)?;
    let params = json!({ "max_subset": max_subset, "len": len, "rule": rule_name(rule), "budget": budget });
    let c: Vec<GeneratingCycle> = c.into_iter().filter(|q| len == 0 || q.len() == len).collect();
    let _ = writeln!(text, "candidate generating cycles: {}", c.len());
    for q in &c {
        let _ = writeln!(text, "  {}", cycle_line(q));
    }
    let result = json!({ "count": c.len(), "generating": to_value(&c) });
    Ok(Output::new(l.describe(), params, result, text))
}

pub fn orbits(src: &GraphSource, oracle: bool) -> CliResult<Output> {
    let l = load(src)?;
    let part = if oracle { true_orbits(&l.graph)? } else { weight_classes(&l.graph, &edge_weights(&l.graph)) };
    let result = to_value(&part);
    let text = pretty(&result);
    Ok(Output::new(l.describe(), json!({ "oracle": oracle }), result, text))
}

pub struct AutParams {
    pub method: Method,
    pub full: bool,
    pub max_subset: usize,
    pub rule: Rule,
    pub budget: u64,
    pub cap: usize,
}

pub fn aut(src: &GraphSource, p: &AutParams) -> CliResult<Output> {
    let l = load(src)?;
    let g = &l.graph;
    let mut text = String::new();
    match p.method {
        Method::Oracle => {
            let r = enumerate_automorphisms(g, p.cap);
            let params = json!({ "method": "oracle", "full": p.full, "cap": p.cap });
            let _ = writeln!(text, "order: {}{}", r.order, if r.truncated { " (truncated)" } else { "" });
            let _ = writeln!(text, "orbits:");
            for c in &r.orbits.classes {
                let vs: Vec<String> = c.vertices.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(text, "  {{{}}}", vs.join(","));
            }
            if p.full {
                let _ = writeln!(text, "elements:");
                list_elements(&mut text, r.group.elements(), true);
            }
            let mut result = to_value(&r);
            if p.full {
                result["elements"] = json!(notation(r.group.elements()));
            }
            let mut out = Output::new(l.describe(), params, result, text);
            out.truncated = r.truncated;
            Ok(out)
        }
        Method::Spectral => {
            let s = iso_set(g, p.rule)?;
            let opts = SpectralOptions { max_subset: p.max_subset, budget: p.budget, family: None };
            let r = automorphisms_from_generating_cycles(g, &s, &opts)?;
            let params = json!({
                "method": "spectral", "full": p.full, "rule": rule_name(p.rule),
                "max_subset": p.max_subset, "budget": p.budget,
            });
            let _ = writeln!(text, "generating cycles: {} of length {}", r.family_size, r.cycle_length);
            let _ = writeln!(text, "nominal: {}", r.nominal);
            let _ = writeln!(text, "raw count: {}", r.raw_count);
            let _ = writeln!(text, "distinct: {}", r.distinct_count);
            let _ = writeln!(text, "closure order: {}", r.closure_order);
            let _ = writeln!(text, "permutations:");
            let listed = if p.full { r.closure.elements() } else { &r.distinct[..] };
            list_elements(&mut text, listed, p.full);
            let mut result = to_value(&r);
            let shown = if p.full { listed.len() } else { listed.len().min(PREVIEW) };
            result[if p.full { "elements" } else { "distinct_preview" }] = json!(notation(&listed[..shown]));
            Ok(Output::new(l.describe(), params, result, text))
        }
    }
}

pub fn cayley(src: &GraphSource, out: Option<&Path>, klein_blocks: bool) -> CliResult<Output> {
    let l = load(src)?;
    let r = enumerate_automorphisms(&l.graph, graphsym::perm::CAYLEY_CAP + 1);
    if r.truncated || r.order > graphsym::perm::CAYLEY_CAP {
        return Err(graphsym::Error::Budget { what: "cayley table", limit: graphsym::perm::CAYLEY_CAP as u64 }.into());
    }
    let elements: Vec<Permutation> = if klein_blocks {
        let k = find_klein_four(&r.group).ok_or_else(|| CliError::Usage("the group has no Klein four-subgroup".into()))?;
        coset_order(&r.group, &k)?
    } else {
        r.group.elements().to_vec()
    };
    let t = cayley_table_ordered(&elements, graphsym::perm::CAYLEY_CAP)?;
    let legend: String = elements.iter().enumerate().map(|(i, p)| format!("{i},{}\n", p.cycle_notation(false))).collect();
    let params = json!({ "klein_blocks": klein_blocks, "out": out.map(|p| p.display().to_string()) });
    let mut result = json!({ "order": t.order, "latin_square": t.is_latin_square(), "legend": notation(&elements) });
    let mut text = String::new();
    match out {
        Some(path) => {
            let legend_path = path.with_extension("legend.csv");
            let write = |p: &Path, body: &str| std::fs::write(p, body).map_err(|source| CliError::Io { path: p.to_owned(), source });
            write(path, &t.to_csv())?;
            write(&legend_path, &format!("index,permutation\n{legend}"))?;
            let _ = writeln!(text, "order {}: table {} legend {}", t.order, path.display(), legend_path.display());
            result["csv"] = json!(path.display().to_string());
            result["legend_csv"] = json!(legend_path.display().to_string());
        }
        None => {
            let _ = writeln!(text, "# legend");
            text.push_str(&legend);
            let _ = writeln!(text, "# table");
            text.push_str(&t.to_csv());
            result["cells"] = to_value(&t.cells);
        }
    }
    Ok(Output::new(l.describe(), params, result, text))
}

pub fn verify(src: &GraphSource, perm: &str) -> CliResult<Output> {
    let l = load(src)?;
    let p = parse_permutation(perm, l.graph.n())?;
    let ok = verify_permutation(&l.graph, &p)?;
    let name = p.cycle_notation(false);
    let text = format!("{name}: {}\n", if ok { "automorphism" } else { "not an automorphism" });
    let result = json!({ "permutation": name, "automorphism": ok });
    let mut out = Output::new(l.describe(), json!({ "perm": perm }), result, text);
    out.negative = !ok;
    Ok(out)
}

pub fn compare(a: &str, b: &str) -> CliResult<Output> {
    let (ga, gb) = (load_either(a)?, load_either(b)?);
    let (wa, wb) = (edge_weights(&ga.graph), edge_weights(&gb.graph));
    let eq = fingerprint_equal(&wa, &wb);
    let text = format!("fingerprints {}\n", if eq { "equal" } else { "differ" });
    let result = json!({
        "equal": eq,
        "a": { "edge_fingerprint": wa.edge_fingerprint, "vertex_fingerprint": wa.vertex_fingerprint },
        "b": { "edge_fingerprint": wb.edge_fingerprint, "vertex_fingerprint": wb.vertex_fingerprint },
    });
    let mut out = Output::new(json!({ "a": ga.describe(), "b": gb.describe() }), json!({}), result, text);
    out.negative = !eq;
    Ok(out)
}
