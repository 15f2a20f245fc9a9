fn main() {
    // ndarray-linalg is built without a bundled backend; the system OpenBLAS
    // (which carries LAPACK) satisfies its symbols.
    println!("cargo:rustc-link-lib=dylib=openblas");
}
