"""Command-line surface: state files, DOT export, wire protocol, subcommands."""
