# Init file for the commands subpackage
