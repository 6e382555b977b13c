# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
"""Settings file loading.

The settings file holds defaults for command line flags, for example::

    budget: 1000000
    precision: 20
    remainder: corrected
    validate:
      max_n: 6

Flags given on the command line always win over the file.
"""
try:
    from ruamel.yaml import YAML
    from ruamel.yaml.error import YAMLError
except ImportError:  # pragma: no cover
    # this is the conda-packaged version of ruamel.yaml which has the
    # module renamed
    from ruamel_yaml import YAML  # pragma: no cover
    from ruamel_yaml.error import YAMLError  # pragma: no cover

import codecs
import errno
import os

from subtuple_pvalue import verbose

possible_settings_file_names = ("subtuple-pvalue.yml", "subtuple-pvalue.yaml")

DEFAULT_SETTINGS_FILENAME = possible_settings_file_names[0]


class SettingsError(ValueError):
    pass


def _load_string(contents):
    # the "rt" loader is a safe loader; it never constructs arbitrary objects
    return YAML(typ='rt').load(contents)


class SettingsFile(object):
    """A YAML settings file, read once when constructed.

    A missing file is fine and behaves as an empty one. A file with
    syntax problems sets ``corrupted`` and ``corrupted_error_message``;
    reading values from it then raises ``SettingsError``.
    """

    @classmethod
    def load_for_directory(cls, directory):
        """Load the settings file from the given directory, even if it doesn't exist.

        Args:
            directory (str): directory to look in

        Returns:
            a new ``SettingsFile``
        """
        for name in possible_settings_file_names:
            path = os.path.join(directory, name)
            if os.path.isfile(path):
                return SettingsFile(path)
        return SettingsFile(os.path.join(directory, DEFAULT_SETTINGS_FILENAME))

    def __init__(self, filename):
        """Load the file with the given filename.

        Raises an exception on an IOError other than a missing file.
        """
        self.filename = filename
        self._exists = False
        self._corrupted = False
        self._corrupted_error_message = None
        self._yaml = None

        try:
            with codecs.open(self.filename, 'r', 'utf-8') as file:
                contents = file.read()
            self._exists = True
            self._yaml = _load_string(contents)
        except IOError as e:
            if e.errno != errno.ENOENT:
                raise e
        except YAMLError as e:
            self._corrupted = True
            self._corrupted_error_message = str(e)

        if self._yaml is None:
            self._yaml = dict()
        elif not isinstance(self._yaml, dict):
            self._corrupted = True
            self._corrupted_error_message = "top level of the settings file must be a mapping of names to values"
            self._yaml = dict()

        if self._exists:
            verbose._verbose_logger().debug("loaded settings from %s", self.filename)

    @property
    def exists(self):
        """True if the file was found on disk."""
        return self._exists

    @property
    def corrupted(self):
        """Get whether the file is corrupted (unparseable)."""
        return self._corrupted

    @property
    def corrupted_error_message(self):
        """Get the error message if file is corrupted, or None if it isn't."""
        return self._corrupted_error_message

    def _throw_if_corrupted(self):
        if self._corrupted:
            raise SettingsError("Cannot use corrupted settings file %s\n%s" %
                                (self.filename, self._corrupted_error_message))

    @classmethod
    def _path(cls, path):
        if isinstance(path, str):
            return (path, )
        else:
            try:
                return list(element for element in path)
            except TypeError:
                raise ValueError("settings path must be a string or an iterable of strings")

    def get_value(self, path, default=None):
        """Get a single value from the settings file.

        Args:
            path (str or list of str): single key, or list of nested keys
            default: returned if the value is absent

        Returns:
            the value from the file or the provided default
        """
        self._throw_if_corrupted()
        current = self._yaml
        for key in self._path(path):
            if isinstance(current, dict) and key in current:
                current = current[key]
            else:
                return default
        return current

    def get_int(self, path, default, minimum=None):
        """Get an integer setting, checking its type and lower bound."""
        value = self.get_value(path, default)
        if isinstance(value, bool) or not isinstance(value, int):
            raise SettingsError("%s: setting %s must be an integer (got %r)" %
                                (self.filename, "/".join(self._path(path)), value))
        if minimum is not None and value < minimum:
            raise SettingsError("%s: setting %s must be at least %d (got %d)" %
                                (self.filename, "/".join(self._path(path)), minimum, value))
        return value

    def get_choice(self, path, default, choices):
        """Get a string setting restricted to ``choices``."""
        value = self.get_value(path, default)
        if value not in choices:
            raise SettingsError("%s: setting %s must be one of %s (got %r)" %
                                (self.filename, "/".join(self._path(path)), ", ".join(choices), value))
        return value
