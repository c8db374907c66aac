//! Text and JSON rendering shared by the subcommands.

use std::fmt;

use serde::Serialize;

use fintop::quotient::Cell;
use fintop::{PointSet, Space};

/// Finished output of one subcommand.
pub struct Report {
    pub text: String,
    pub json: serde_json::Value,
    pub disagreements: Vec<String>,
}

impl Report {
    pub fn new(text: String, json: serde_json::Value) -> Self {
        Report {
            text,
            json,
            disagreements: Vec::new(),
        }
    }

    pub fn with_disagreements(mut self, d: Vec<String>) -> Self {
        self.disagreements = d;
        self
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn labels_of(space: &Space, set: PointSet) -> Vec<String> {
    set.iter().map(|x| space.label(x).to_string()).collect()
}

pub fn labelled_sets(space: &Space, sets: &[PointSet]) -> Vec<Vec<String>> {
    sets.iter().map(|&s| labels_of(space, s)).collect()
}

/// Boolean fields of a flat serializable struct, in key order.
pub fn flags<T: Serialize>(value: &T) -> Vec<(String, bool)> {
    match serde_json::to_value(value).expect("flags serialize") {
        serde_json::Value::Object(m) => m
            .into_iter()
            .filter_map(|(k, v)| v.as_bool().map(|b| (k, b)))
            .collect(),
        _ => Vec::new(),
    }
}

pub fn cell(c: &Cell) -> String {
    match c {
        Cell::Point(t) => format!("{{{t}}}"),
        Cell::Open(l, r) => format!("({l}, {r})"),
    }
}

/// A value computed along one path.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Val {
    Bool(bool),
    Int(i64),
    Set(Vec<String>),
    Sets(Vec<Vec<String>>),
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Bool(b) => f.write_str(yes_no(*b)),
            Val::Int(i) => write!(f, "{i}"),
            Val::Set(s) => write!(f, "{{{}}}", s.join(" ")),
            Val::Sets(ss) => {
                let parts: Vec<String> = ss.iter().map(|s| format!("{{{}}}", s.join(" "))).collect();
                f.write_str(&parts.join(" "))
            }
        }
    }
}

#[derive(Debug, Serialize)]
struct Check {
    name: String,
    order: Val,
    definitional: Option<Val>,
    agree: bool,
}

/// Verdicts from the order-based path and the definitional path, side by
/// side. A missing definitional value means the open family was too large
/// to list.
pub struct Checks<'a> {
    space: &'a Space,
    items: Vec<Check>,
}

impl<'a> Checks<'a> {
    pub fn new(space: &'a Space) -> Self {
        Checks {
            space,
            items: Vec::new(),
        }
    }

    fn push(&mut self, name: &str, order: Val, definitional: Option<Val>) {
        let agree = definitional.as_ref().is_none_or(|d| *d == order);
        self.items.push(Check {
            name: name.to_string(),
            order,
            definitional,
            agree,
        });
    }

    pub fn boolean(&mut self, name: &str, order: bool, def: Option<bool>) {
        self.push(name, Val::Bool(order), def.map(Val::Bool));
    }

    pub fn int(&mut self, name: &str, order: i64, def: Option<i64>) {
        self.push(name, Val::Int(order), def.map(Val::Int));
    }

    pub fn set(&mut self, name: &str, order: PointSet, def: Option<PointSet>) {
        let s = self.space;
        self.push(
            name,
            Val::Set(labels_of(s, order)),
            def.map(|d| Val::Set(labels_of(s, d))),
        );
    }

    /// Compares partitions as sorted lists.
    pub fn sets(&mut self, name: &str, order: &[PointSet], def: Option<Vec<PointSet>>) {
        let s = self.space;
        let norm = |v: &[PointSet]| {
            let mut v = v.to_vec();
            v.sort_by_key(|p| p.bits());
            Val::Sets(labelled_sets(s, &v))
        };
        self.push(name, norm(order), def.map(|d| norm(&d)));
    }

    pub fn text(&self) -> String {
        let mut out = String::from("checks (order | definitional):\n");
        for c in &self.items {
            let def = c
                .definitional
                .as_ref()
                .map(|d| d.to_string())
                .unwrap_or_else(|| "skipped".to_string());
            let mark = if c.agree { "ok" } else { "DISAGREE" };
            out.push_str(&format!("  {}: {} | {} {}\n", c.name, c.order, def, mark));
        }
        out
    }

    pub fn json(&self) -> serde_json::Value {
        serde_json::to_value(&self.items).expect("checks serialize")
    }

    pub fn disagreements(&self) -> Vec<String> {
        self.items
            .iter()
            .filter(|c| !c.agree)
            .map(|c| c.name.clone())
            .collect()
    }
}
