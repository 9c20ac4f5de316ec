use pcfquad::mapping_scheme::{enumerate, ExtendedScheme, SchemeClass};
use serde_json::json;

use super::pretty;
use crate::error::{usage, CliError};
use crate::io::{parse_class, read_scheme};
use crate::{Emit, SchemesCmd};

pub fn run(cmd: SchemesCmd) -> Result<String, CliError> {
    match cmd {
        SchemesCmd::Enumerate { size, emit } => {
            let schemes = enumerate(size)?;
            match emit {
                Emit::Json => {
                    let items: Vec<_> =
                        schemes.iter().map(|s| json!({"class": SchemeClass::of(s), "scheme": s})).collect();
                    Ok(pretty(&json!(items)))
                }
                Emit::Text => Ok(schemes.iter().map(|s| format!("{}\n", SchemeClass::of(s))).collect()),
                Emit::Dot => Err(usage("enumerate has no dot output")),
            }
        }
        SchemesCmd::Classify { scheme, emit } => {
            let class = SchemeClass::of(&read_scheme(&scheme)?);
            match emit {
                Emit::Json => Ok(pretty(&json!(class))),
                Emit::Text => Ok(class.to_string()),
                Emit::Dot => Err(usage("classify has no dot output")),
            }
        }
        SchemesCmd::Extend { scheme } => Ok(pretty(&json!(ExtendedScheme::new(&read_scheme(&scheme)?)))),
        SchemesCmd::Build { class } => Ok(pretty(&json!(parse_class(&class)?.build()))),
    }
}
