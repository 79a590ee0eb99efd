"""named checks run by verify.run_suite and the verify subcommand"""
