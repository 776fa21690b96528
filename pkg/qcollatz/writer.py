# vim: tabstop=4 shiftwidth=4 softtabstop=4
"""
Base classes for the output methods of the various formats.
"""


class FileWriter(object):
    """Simple output half of the codec process.

    `target` is a path, opened here and closed by `close`, or an open
    stream, which is flushed but left open."""

    def __init__(self, target):
        self.path = None
        self.file = None
        self._owned = False
        if hasattr(target, 'write'):
            self.file = target
        else:
            self.path = target
            self._init_file()

    def _init_file(self):
        """Get the file handle open for writing"""
        self.file = open(self.path, "w", newline="")
        self._owned = True

    def write(self, key, value):
        """Write out an individual record (unimplemented)"""
        raise NotImplementedError

    def write_header(self):
        """Write out the file header"""
        pass

    def write_footer(self):
        """Write out the file footer"""
        pass

    def close(self):
        """Close and flush the file."""
        if self._owned:
            self.file.close()
        else:
            self.file.flush()

    def serialize(self, iterable):
        """Wrapper for writing all items in an iterable object."""
        if isinstance(iterable, dict):
            iterable = sorted(iterable.items())
        self.write_header()
        for key, val in iterable:
            self.write(key, val)
        self.write_footer()
        self.close()
