pub mod dynamics;
pub mod moduli;
pub mod reproduce;
pub mod schemes;
pub mod tree;

use serde_json::Value;

pub fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}
