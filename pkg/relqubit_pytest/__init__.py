"""pytest plugin for python-relqubit."""
