"""The main script for running the command line interface."""
from weier4.app.cli import main


# execute the main entry point of the CLI
main()
