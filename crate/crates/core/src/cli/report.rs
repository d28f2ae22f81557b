//! JSON envelope and serialization helpers shared by every subcommand.

use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::field::{FieldCtx, FieldElem};

pub const SCHEMA: u32 = 1;
pub const TOOL: &str = "planarlab";

/// Field elements serialize as lowercase hex of their bits, without prefix.
pub fn hex_elem<S: Serializer>(x: &FieldElem, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{x:x}"))
}

pub fn hex_elems<S: Serializer>(xs: &[FieldElem], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|x| format!("{x:x}")))
}

/// Top-level document. Keys come out sorted, so identical inputs give
/// identical bytes.
pub struct Envelope<'a> {
    pub command: &'a str,
    pub config: Value,
    pub field: Option<&'a FieldCtx>,
    pub result: Value,
    pub duration_ms: Option<u64>,
}

impl Envelope<'_> {
    pub fn to_value(&self) -> Value {
        let mut doc = json!({
            "schema": SCHEMA,
            "tool": TOOL,
            "version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "config": self.config,
            "result": self.result,
        });
        let map = doc.as_object_mut().expect("object literal");
        if let Some(ctx) = self.field {
            map.insert("r".into(), json!(ctx.r()));
            map.insert("modulus".into(), json!(ctx.modulus_string()));
        }
        if let Some(ms) = self.duration_ms {
            map.insert("duration_ms".into(), json!(ms));
        }
        doc
    }
}

pub fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize infallibly")
}
