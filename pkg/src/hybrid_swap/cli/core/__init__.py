# Init file for the core logic subpackage
