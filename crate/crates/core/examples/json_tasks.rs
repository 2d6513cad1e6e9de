//! The JSON task interface used by the command-line tool.

use p1torsor::task;

fn main() {
    let requests = [
        r#"{"command":"cohomology","payload":{"field":{"field":"Q"},"rank":1,"transition":[["t^-2"]]}}"#,
        r#"{"command":"splitting-type","payload":{"field":{"field":"Fp","p":3},"rank":2,"transition":[["t","0"],["1","t^-1"]]}}"#,
        r#"{"command":"pgl-lift","payload":{"group":"PGL","n":3,"weights":[4,2,2]}}"#,
        r#"{"command":"splitting-type","payload":{"field":{"field":"Q"},"rank":2,"transition":[["1","1"],["1","1"]]}}"#,
        r#"{"command":"frobnicate"}"#,
    ];
    for r in requests {
        let out = task::run(r);
        println!("exit {}: {}", out.exit_code, out.body);
    }
}
