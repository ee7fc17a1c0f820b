use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use tightcomp::{Execution, Limits, DEFAULT_NODE_CAP};

use crate::commands::Command;
use crate::corpus::{CorpusConfig, DEFAULT_RANDOM_POSETS, DEFAULT_SEED};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "tightcomp", version, about = "Loose and tight completions of finite posets and categories")]
pub struct Cli {
    /// Bound on the states any single search may visit.
    #[arg(long, global = true, env = "TIGHTCOMP_CAP", default_value_t = DEFAULT_NODE_CAP)]
    pub node_cap: usize,
    /// Seed for randomized corpora.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Run every search on the calling thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Parse and check every item in a file.
    Validate { file: PathBuf },
    /// Dedekind-MacNeille completion of a poset.
    Dm { poset: PathBuf },
    /// Completion by scanning all subsets, compared with `dm`.
    DmOracle { poset: PathBuf },
    /// Left Kan action of a left action.
    Lan { action: PathBuf },
    /// Right Kan action of a right action.
    Ran { action: PathBuf },
    /// The composite of both Kan constructions.
    Square { action: PathBuf },
    /// Gaps between a left and a right action, with both transpose counts.
    Gaps { left: PathBuf, right: PathBuf },
    CheckCut { cut: PathBuf },
    /// Absolute cuts whose actions have fibers of at most `cap` elements.
    CutsEnum {
        category: PathBuf,
        #[arg(long, default_value_t = 1)]
        cap: usize,
    },
    TightColim { diagram: PathBuf },
    TightLim { diagram: PathBuf },
    /// The cut of an object and the hom counts between embedded objects.
    Embed { category: PathBuf, object: String },
    GroupLan { group: PathBuf, action: PathBuf },
    Z4Demo,
    /// Run the acceptance criteria and the golden files.
    CorpusVerify {
        /// Directory holding `manifest.json`; defaults to the bundled corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Only run these criteria.
        #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u8).range(1..=11))]
        only: Vec<u8>,
        /// Skip the criteria and only compare the golden files.
        #[arg(long, conflicts_with = "only")]
        golden_only: bool,
        #[arg(long, default_value_t = DEFAULT_RANDOM_POSETS)]
        random_posets: usize,
        /// Rewrite the expected outputs instead of comparing.
        #[arg(long, hide = true)]
        bless: bool,
    },
}

impl Cli {
    pub fn limits(&self) -> Limits {
        let l = Limits::with_cap(self.node_cap);
        if self.sequential {
            Limits { exec: Execution::Sequential, ..l }
        } else {
            l
        }
    }

    pub fn command(&self) -> Command {
        match &self.command {
            Sub::Validate { file } => Command::Validate(file.clone()),
            Sub::Dm { poset } => Command::Dm(poset.clone()),
            Sub::DmOracle { poset } => Command::DmOracle(poset.clone()),
            Sub::Lan { action } => Command::Lan(action.clone()),
            Sub::Ran { action } => Command::Ran(action.clone()),
            Sub::Square { action } => Command::Square(action.clone()),
            Sub::Gaps { left, right } => Command::Gaps(left.clone(), right.clone()),
            Sub::CheckCut { cut } => Command::CheckCut(cut.clone()),
            Sub::CutsEnum { category, cap } => Command::CutsEnum { category: category.clone(), cap: *cap },
            Sub::TightColim { diagram } => Command::TightColim(diagram.clone()),
            Sub::TightLim { diagram } => Command::TightLim(diagram.clone()),
            Sub::Embed { category, object } => Command::Embed { category: category.clone(), object: object.clone() },
            Sub::GroupLan { group, action } => Command::GroupLan { group: group.clone(), action: action.clone() },
            Sub::Z4Demo => Command::Z4Demo,
            Sub::CorpusVerify { corpus, only, golden_only, random_posets, bless } => Command::CorpusVerify(CorpusConfig {
                seed: self.seed,
                random_posets: *random_posets,
                corpus: corpus.clone(),
                only: only.iter().map(|&i| i as usize).collect(),
                golden_only: *golden_only,
                bless: *bless,
            }),
        }
    }
}
