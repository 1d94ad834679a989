//! Routing for `qsc expand`.

use anyhow::{anyhow, Context, Result};
use clap::Args;
use qsc_core::qsym::{convert, convert_expansion, Basis, BasisExpansion};
use qsc_core::{Composition, Error};

use crate::{basis_list, emit, input, json, TextFormat};

#[derive(Args)]
pub struct ExpandArgs {
    /// Source basis; required with --alpha.
    #[arg(long, requires = "alpha", conflicts_with = "input")]
    from: Option<Basis>,
    #[arg(long, value_parser = input::composition, requires = "from")]
    alpha: Option<Composition>,
    /// Read an expansion (as printed by this command) from a file, or - for stdin.
    #[arg(long, required_unless_present = "from")]
    input: Option<String>,
    #[arg(long)]
    to: Basis,
    #[arg(long, value_enum, default_value_t = TextFormat::Json)]
    format: TextFormat,
}

fn targets(from: Basis) -> String {
    if from.is_quasisymmetric() {
        Basis::ALL.iter().filter(|b| b.is_quasisymmetric()).map(|b| b.cli_name()).collect::<Vec<_>>().join(", ")
    } else if from == Basis::YoungNcSchur {
        "young-ncschur, immaculate".into()
    } else {
        from.cli_name().into()
    }
}

fn read_expansion(path: &str) -> Result<BasisExpansion> {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin())?
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?
    };
    serde_json::from_str(&text).with_context(|| format!("{path} is not an expansion"))
}

pub fn run(args: ExpandArgs) -> Result<()> {
    let result = match (&args.from, &args.alpha, &args.input) {
        (Some(from), Some(alpha), None) => convert(*from, alpha, args.to),
        (None, None, Some(path)) => convert_expansion(&read_expansion(path)?, args.to),
        _ => return Err(anyhow!("give either --from and --alpha, or --input; bases: {}", basis_list())),
    };
    let result = match result {
        Err(e @ Error::UnsupportedPair { from, .. }) => {
            return Err(anyhow!("{e}; supported targets for {from}: {}", targets(from)));
        }
        other => other?,
    };
    match args.format {
        TextFormat::Json => emit(&json(&result)?),
        TextFormat::Text => emit(&result.to_string()),
    }
}
