//! Bundled example tasks.

use super::task::TaskDocument;
use crate::{Error, Result};

static CORPUS: &[(&str, &str)] = &[
    ("center-meets-curve", include_str!("../../corpus/center-meets-curve.json")),
    ("circle-line", include_str!("../../corpus/circle-line.json")),
    ("distraction-triple-line", include_str!("../../corpus/distraction-triple-line.json")),
    ("dual-cubic", include_str!("../../corpus/dual-cubic.json")),
    ("lorentz", include_str!("../../corpus/lorentz.json")),
    ("non-sufficiency", include_str!("../../corpus/non-sufficiency.json")),
    ("quartic-plus-line", include_str!("../../corpus/quartic-plus-line.json")),
    ("reciprocal-surface", include_str!("../../corpus/reciprocal-surface.json")),
    ("reciprocal-threefold-section", include_str!("../../corpus/reciprocal-threefold-section.json")),
    ("shastri-trefoil", include_str!("../../corpus/shastri-trefoil.json")),
    ("sum-of-squares", include_str!("../../corpus/sum-of-squares.json")),
    ("tighten-two-lines", include_str!("../../corpus/tighten-two-lines.json")),
    ("twisted-cubics", include_str!("../../corpus/twisted-cubics.json")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    CORPUS.iter().map(|(n, _)| *n)
}

pub fn source(name: &str) -> Result<&'static str> {
    CORPUS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| *s)
        .ok_or_else(|| Error::Task(format!("no corpus item named `{name}`")))
}

pub fn load(name: &str) -> Result<TaskDocument> {
    TaskDocument::from_json(source(name)?)
}
