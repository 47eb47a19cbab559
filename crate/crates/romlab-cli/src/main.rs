use clap::Parser;

use romlab_cli::commands::{self, Cli};

fn main() {
    // die quietly when a downstream pipe closes instead of panicking
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    // ROMLAB_THREADS caps the worker pool used by grid and sweep
    // evaluations; unset means the library default.
    if let Ok(text) = std::env::var("ROMLAB_THREADS") {
        if let Ok(n) = text.trim().parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        }
    }
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(()) => {}
        Err(err) => {
            eprintln!("romlab: {err}");
            std::process::exit(err.exit_code());
        }
    }
}
