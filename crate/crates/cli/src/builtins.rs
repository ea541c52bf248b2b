//! Named built-in groups, shipped as embedded group files so acceptance
//! runs are self-contained.

pub fn lookup(name: &str) -> Option<&'static str> {
    Some(match name {
        "c2" => include_str!("../builtins/c2.json"),
        "c3" => include_str!("../builtins/c3.json"),
        "c4" => include_str!("../builtins/c4.json"),
        "c5" => include_str!("../builtins/c5.json"),
        "c6" => include_str!("../builtins/c6.json"),
        "c7" => include_str!("../builtins/c7.json"),
        "c8" => include_str!("../builtins/c8.json"),
        "d4" => include_str!("../builtins/d4.json"),
        "d5" => include_str!("../builtins/d5.json"),
        "d6" => include_str!("../builtins/d6.json"),
        "klein4" => include_str!("../builtins/klein4.json"),
        "q8" => include_str!("../builtins/q8.json"),
        "sym3" => include_str!("../builtins/sym3.json"),
        "sym4" => include_str!("../builtins/sym4.json"),
        "sym5" => include_str!("../builtins/sym5.json"),
        "sym6" => include_str!("../builtins/sym6.json"),
        "alt4" => include_str!("../builtins/alt4.json"),
        "alt5" => include_str!("../builtins/alt5.json"),
        "alt6" => include_str!("../builtins/alt6.json"),
        "psl27" => include_str!("../builtins/psl27.json"),
        "pgl27" => include_str!("../builtins/pgl27.json"),
        "gl32" => include_str!("../builtins/gl32.json"),
        "agl15" => include_str!("../builtins/agl15.json"),
        _ => return None,
    })
}

pub const NAMES: &[&str] = &[
    "agl15", "alt4", "alt5", "alt6", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "d4", "d5", "d6",
    "gl32", "klein4", "pgl27", "psl27", "q8", "sym3", "sym4", "sym5", "sym6",
];
