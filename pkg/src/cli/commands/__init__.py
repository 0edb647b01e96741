"""Sub-commands of the lp-cheb command line, one module each."""
