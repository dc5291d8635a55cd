"""Random generators, brute-force oracles, property suites and the CLI."""
