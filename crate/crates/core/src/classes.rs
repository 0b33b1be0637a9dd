//! Named pattern classes.

use std::sync::OnceLock;

use crate::permcore::PatternSet;

macro_rules! class_fn {
    ($(#[$m:meta])* $name:ident, [$($p:literal),+]) => {
        $(#[$m])*
        pub fn $name() -> &'static PatternSet {
            static CELL: OnceLock<PatternSet> = OnceLock::new();
            CELL.get_or_init(|| PatternSet::from_digit_strs(&[$($p),+]))
        }
    };
}

class_fn!(
    /// Domain of `phi`: `{3124, 3214}`.
    type_one, ["3124", "3214"]);
class_fn!(
    /// Domain of `psi`: `{3142, 3241}`.
    type_two, ["3142", "3241"]);
class_fn!(
    /// Domain of `alpha`.
    alpha_source, ["31245", "32145", "31254", "32154"]);
class_fn!(
    /// Domain of `beta`.
    alpha_target, ["31425", "32415", "31524", "32514"]);
class_fn!(
    /// Mapped onto `(201,210)`-avoiding inversion sequences by the Martinez-Savage coding.
    ms_class, ["45312", "45321", "54312", "54321"]);
class_fn!(
    /// Inverse image of [`alpha_target`].
    inverse_target, ["24135", "24153", "42135", "42153"]);

/// The thirteen quadruples conjectured to share one counting sequence, in
/// the order they are usually listed.
pub const THIRTEEN: [[&str; 4]; 13] = [
    ["45312", "45321", "54312", "54321"],
    ["31245", "32145", "31254", "32154"],
    ["31425", "32415", "31524", "32514"],
    ["41325", "51324", "42315", "52314"],
    ["13425", "23415", "13524", "23514"],
    ["13452", "23451", "13542", "23541"],
    ["24513", "25413", "24531", "25431"],
    ["13245", "23145", "13254", "23154"],
    ["32415", "34215", "32451", "34251"],
    ["21345", "23145", "23154", "21354"],
    ["24135", "25134", "25314", "24315"],
    ["42513", "52413", "42531", "52431"],
    ["42135", "52134", "52314", "42315"],
];

/// The thirteen classes as pattern sets.
pub fn thirteen() -> Vec<PatternSet> {
    THIRTEEN.iter().map(|ps| PatternSet::from_digit_strs(ps)).collect()
}

/// What a class alias names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedClass {
    /// `(201,210)`-avoiding inversion sequences.
    InversionSequences,
    Permutations(PatternSet),
}

/// Every alias understood by [`resolve`], with its description.
pub fn aliases() -> Vec<(String, String)> {
    let mut out = vec![
        ("I201210".to_string(), "inversion sequences avoiding 201 and 210".to_string()),
        ("C31243214".to_string(), "S_n(3124,3214)".to_string()),
        ("C31423241".to_string(), "S_n(3142,3241)".to_string()),
    ];
    for (i, ps) in THIRTEEN.iter().enumerate() {
        out.push((format!("K{:02}", i + 1), format!("S_n({})", ps.join(","))));
        out.push((format!("C{}", ps[0]), format!("S_n({})", ps.join(","))));
    }
    out
}

/// Looks up an alias: `I201210`, `C31243214`, `C31423241`, `K01`..`K13`, or
/// `C` followed by the first pattern of one of the thirteen quadruples
/// (for example `C31245`).
pub fn resolve(alias: &str) -> Option<NamedClass> {
    let a = alias.trim();
    match a {
        "I201210" => return Some(NamedClass::InversionSequences),
        "C31243214" => return Some(NamedClass::Permutations(type_one().clone())),
        "C31423241" => return Some(NamedClass::Permutations(type_two().clone())),
        _ => {}
    }
    if let Some(idx) = a.strip_prefix('K').and_then(|d| d.parse::<usize>().ok()) {
        return THIRTEEN.get(idx.checked_sub(1)?).map(|ps| NamedClass::Permutations(PatternSet::from_digit_strs(ps)));
    }
    let first = a.strip_prefix('C')?;
    THIRTEEN.iter().find(|ps| ps[0] == first).map(|ps| NamedClass::Permutations(PatternSet::from_digit_strs(ps)))
}
