//! `qsc demo`: traced insertion, rapture and word insertion.

use anyhow::{bail, Result};
use clap::Subcommand;
use qsc_core::{insert, insert_word_steps, is_virtuous, rapture, uninsert, Cell, Filling};
use serde_json::{json, Value};

use crate::{emit, input};

#[derive(Subcommand)]
pub enum DemoCommand {
    /// Insert k into a Young composition tableau.
    Insert {
        /// JSON rows or compact form, bottom row first: "2/3,4,7/6,8".
        #[arg(long, value_parser = input::tableau)]
        tableau: Filling,
        #[arg(long)]
        k: u32,
    },
    /// Rapture a virtuous cell, given by position or by its entry.
    Rapture {
        #[arg(long, value_parser = input::tableau)]
        tableau: Filling,
        #[arg(long, value_parser = input::cell, required_unless_present = "entry", conflicts_with = "entry")]
        cell: Option<Cell>,
        #[arg(long)]
        entry: Option<u32>,
    },
    /// Insert a word letter by letter from the empty tableau.
    Word {
        /// Letters separated by spaces or commas.
        #[arg(long)]
        word: String,
    },
    /// Recover the word from an insertion/recording pair.
    Uninsert {
        #[arg(long, value_parser = input::tableau)]
        p: Filling,
        #[arg(long, value_parser = input::tableau)]
        q: Filling,
    },
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

fn locate(t: &Filling, entry: u32) -> Result<Cell> {
    let cells: Vec<Cell> = t.cells().filter(|&(_, v)| v == entry).map(|(c, _)| c).collect();
    match cells[..] {
        [c] => Ok(c),
        [] => bail!("{entry} does not occur in the tableau"),
        _ => bail!("{entry} occurs {} times; pick one with --cell", cells.len()),
    }
}

pub fn run(cmd: DemoCommand) -> Result<()> {
    let out = match cmd {
        DemoCommand::Insert { tableau, k } => {
            let r = insert(&tableau, k)?;
            merge(json!({ "operation": "insert", "input": tableau, "k": k }), serde_json::to_value(r)?)
        }
        DemoCommand::Rapture { tableau, cell, entry } => {
            let cell = match (cell, entry) {
                (Some(c), _) => c,
                (None, Some(v)) => locate(&tableau, v)?,
                (None, None) => bail!("give --cell or --entry"),
            };
            if tableau.get(cell).is_none() {
                bail!("cell {cell} is outside the tableau");
            }
            if tableau.is_ssyct() && !is_virtuous(&tableau, cell)? {
                bail!(
                    "cell {cell} is not virtuous: only a row-final entry larger than everything below it in its \
                     column, with no lower row ending in that column, can be raptured"
                );
            }
            let r = rapture(&tableau, cell)?;
            merge(json!({ "operation": "rapture", "input": tableau, "cell": cell }), serde_json::to_value(r)?)
        }
        DemoCommand::Word { word } => {
            let word = input::word(&word)?;
            let steps = insert_word_steps(&word)?;
            let (p, q) = match steps.last() {
                Some(s) => (s.insertion.tableau.clone(), s.recording.clone()),
                None => (Filling::empty(), Filling::empty()),
            };
            json!({ "operation": "word", "word": word, "p": p, "q": q, "steps": steps })
        }
        DemoCommand::Uninsert { p, q } => {
            let word = uninsert(&p, &q)?;
            json!({ "operation": "uninsert", "p": p, "q": q, "word": word })
        }
    };
    emit(&serde_json::to_string_pretty(&out)?)
}
