use std::io::{self, Write};
use std::process::ExitCode;

use braidlift::{run, Command, Format, RunConfig};
use clap::{Args, Parser, Subcommand, ValueEnum};

const SYNTAX: &str = "\
Braid words: space-separated letters read as a composition, so the rightmost
letter acts first. `s3` is the lifted half twist of p3 and p4, `dx3`, `dy3`,
`dz3` are the Dehn twists about x3, y3, z3, and a `^-1` suffix inverts:
    \"s1 s2^-1 s1\"    \"dz2^-1 dy2^-1\"

Groupoid words (for `act --apply`): space-separated arrows a<i>, b<i>, c<i>
for the three sheets, each optionally suffixed `^-1`; a capital letter is
shorthand for the inverse (`A3` = `a3^-1`). The word is read left to right
as a path, and `1` is the empty word.

Exit status: 0 when every asserted check passes, 1 when one fails,
2 on a usage or parse error.";

#[derive(Parser)]
#[command(name = "braidlift", version, about = "Lifted braid actions on the 3-fold branched cover of the disk", after_help = SYNTAX)]
struct Cli {
    /// Output format; `json` writes one record per line.
    #[arg(long, value_enum, global = true, default_value_t = FormatArg::Text)]
    format: FormatArg,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Euler characteristic, boundary and genus of the cyclic cover for 1..=k branch points.
    Topology {
        /// Largest number of branch points; rows run from 1.
        #[arg(long, required_unless_present = "monodromy")]
        k: Option<usize>,
        /// Degree of the cover.
        #[arg(long, default_value_t = 3)]
        sheets: usize,
        /// Explicit branch permutations, e.g. "(0 1 2),(0 2 1)"; prints a single row.
        #[arg(long)]
        monodromy: Option<String>,
    },
    /// Braid and far-commutation relations of the lifted half twists.
    VerifyBraid(Common),
    /// The lifted half twist against both products of inverse Dehn twists.
    VerifyDecomposition(Common),
    /// Printed action tables on the fundamental group against the derived automorphisms.
    VerifyPi1Tables(Common),
    /// Image of every arrow and every free generator under a braid word.
    #[command(after_help = SYNTAX)]
    Act {
        #[command(flatten)]
        common: Common,
        /// Braid word, e.g. "s1 s2^-1".
        #[arg(long)]
        word: String,
        /// Optional groupoid word to push through the braid word.
        #[arg(long)]
        apply: Option<String>,
    },
}

#[derive(Args)]
struct Common {
    /// Number of branch points.
    #[arg(long)]
    k: usize,
    /// Degree of the cover.
    #[arg(long, default_value_t = 3)]
    sheets: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    let (command, common, word, apply, monodromy) = match cli.command {
        Cmd::Topology { k, sheets, monodromy } => {
            let common = Common { k: k.unwrap_or(0), sheets };
            (Command::Topology, common, None, None, monodromy)
        }
        Cmd::VerifyBraid(c) => (Command::VerifyBraid, c, None, None, None),
        Cmd::VerifyDecomposition(c) => (Command::VerifyDecomposition, c, None, None, None),
        Cmd::VerifyPi1Tables(c) => (Command::VerifyPi1Tables, c, None, None, None),
        Cmd::Act { common, word, apply } => (Command::Act, common, Some(word), apply, None),
    };
    let config = RunConfig {
        command,
        k: common.k,
        sheets: common.sheets,
        word,
        apply,
        monodromy,
        format,
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match run(&config, &mut out) {
        Ok(outcome) => outcome.exit_code(),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
