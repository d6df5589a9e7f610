//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "graphsym", version, about = "Automorphism groups from edge-cut spectra and generating cycles")]
pub struct Cli {
    /// Wrap the payload in a JSON report {"command","graph","result",...}.
    #[arg(long, global = true)]
    pub json: bool,
    /// Leave wall time out of reports so runs compare byte for byte.
    #[arg(long, global = true)]
    pub stable: bool,
    /// Worker threads for the parallel searches.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: u16,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// A built-in graph; see `graphsym catalog`.
    #[arg(long)]
    pub name: Option<String>,
    /// An edge-list, JSON or DOT file.
    #[arg(long)]
    pub graph: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Rule {
    Relevant,
    Isometric,
}

impl From<Rule> for graphsym::CycleRule {
    fn from(r: Rule) -> Self {
        match r {
            Rule::Relevant => graphsym::CycleRule::Relevant,
            Rule::Isometric => graphsym::CycleRule::Isometric,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Method {
    Spectral,
    Oracle,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ExportFormat {
    Edgelist,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the built-in graphs, or print one of them.
    Catalog {
        #[arg(long)]
        name: Option<String>,
        /// Print the named graph in this format.
        #[arg(long, requires = "name")]
        export: Option<ExportFormat>,
    },
    /// Edge and vertex weights with their sorted fingerprints.
    Invariants {
        #[command(flatten)]
        src: GraphSource,
    },
    /// Isometric cycles in canonical order.
    Isocycles {
        #[command(flatten)]
        src: GraphSource,
        #[arg(long, value_enum, default_value_t = Rule::Relevant)]
        rule: Rule,
        /// Print only the number of cycles.
        #[arg(long)]
        count_only: bool,
    },
    /// Generating cycles: the cover rule with --k, otherwise ring-sum candidates.
    Gencycles {
        #[command(flatten)]
        src: GraphSource,
        /// Subset size for the cover rule.
        #[arg(long)]
        k: Option<usize>,
        /// Only isometric cycles of this length take part; 0 keeps all.
        #[arg(long, default_value_t = 0)]
        len: usize,
        /// Largest subset summed when searching candidates.
        #[arg(long, default_value_t = graphsym::generating::DEFAULT_MAX_SUBSET)]
        max_subset: usize,
        #[arg(long, value_enum, default_value_t = Rule::Relevant)]
        rule: Rule,
        #[arg(long, default_value_t = graphsym::generating::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Vertex weight classes, or true orbits with --oracle.
    Orbits {
        #[command(flatten)]
        src: GraphSource,
        #[arg(long)]
        oracle: bool,
    },
    /// The automorphism group.
    Aut {
        #[command(flatten)]
        src: GraphSource,
        #[arg(long, value_enum, default_value_t = Method::Spectral)]
        method: Method,
        /// List every group element.
        #[arg(long)]
        full: bool,
        #[arg(long, default_value_t = graphsym::generating::DEFAULT_MAX_SUBSET)]
        max_subset: usize,
        #[arg(long, value_enum, default_value_t = Rule::Relevant)]
        rule: Rule,
        #[arg(long, default_value_t = graphsym::generating::DEFAULT_BUDGET)]
        budget: u64,
        /// Stop the oracle after this many automorphisms.
        #[arg(long, default_value_t = graphsym::oracle::DEFAULT_CAP)]
        cap: usize,
    },
    /// Cayley table of the automorphism group.
    Cayley {
        #[command(flatten)]
        src: GraphSource,
        /// Write the table here as CSV, with a legend file beside it.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Arrange elements by cosets of a Klein four-subgroup.
        #[arg(long)]
        klein_blocks: bool,
    },
    /// Check that a permutation is an automorphism.
    Verify {
        #[command(flatten)]
        src: GraphSource,
        /// Image list such as `2,1,3` or cycle notation such as `(1 2)`.
        #[arg(long)]
        perm: String,
    },
    /// Compare the weight fingerprints of two graphs (names or files).
    Compare {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
}
