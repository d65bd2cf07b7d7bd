fn main() {
    // die quietly when the consumer closes the pipe early
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let args: Vec<String> = std::env::args().skip(1).collect();
    std::process::exit(drckit::cli::run(&args));
}
