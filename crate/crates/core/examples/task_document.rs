//! Building a task document in code, running it, and printing the JSON certificate.

use hypcert::cli::{run, Task, TaskDocument};

fn main() -> hypcert::Result<()> {
    let task: Task = serde_json::from_str(
        r#"{"kind": "bezout", "p": "x1^3 - x1*x0^2", "q": "3*x1^2*x0 - x0^3", "degree": 3}"#,
    )
    .map_err(|e| hypcert::Error::Task(e.to_string()))?;
    let mut doc = TaskDocument::new(task);
    doc.name = Some("derivative pencil".into());
    let cert = run(&doc)?;
    print!("{}", cert.to_json());
    std::process::exit(cert.exit_code);
}
