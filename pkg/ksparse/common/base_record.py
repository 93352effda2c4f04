import json

from .. import util


class BaseRecord:
    """Base class for ksparse records which are read from and written to JSON,
    such as SolveReport, RunConfig and SpanningTree.

    Subclasses define:
        _ALLOWED_KEYS: the keys accepted by from_dict and emitted by to_dict
        _SCHEMA: the name of the schema in resources/schemas to validate against, or None
    """

    _ALLOWED_KEYS = set()
    _SCHEMA = None

    @classmethod
    def from_dict(cls, record_dict):
        """Reads a dictionary into a record.

        Raises:
            ValueError: if the dictionary contains keys not in _ALLOWED_KEYS
            jsonschema.ValidationError: if the dictionary does not follow the schema
        """
        keys = set(record_dict.keys())
        invalid_keys = keys.difference(cls._ALLOWED_KEYS)
        if invalid_keys:
            msg = (
                "JSON object contains invalid keys: {0}.\n"
                "Must be one of: {1}".format(sorted(invalid_keys), sorted(cls._ALLOWED_KEYS))
            )
            raise ValueError(msg)
        if cls._SCHEMA is not None:
            util.validate_json(record_dict, cls._SCHEMA)
        return cls(**record_dict)

    def to_dict(self):
        record_dict = {}
        for key in self._ALLOWED_KEYS:
            value = self.__dict__.get(key)
            if value is not None:
                record_dict[key] = value
        return record_dict

    def validate(self):
        if self._SCHEMA is not None:
            util.validate_json(self.to_dict(), self._SCHEMA)

    @classmethod
    def from_json(cls, filepath):
        with open(filepath) as f:
            return cls.from_dict(json.load(f))

    @classmethod
    def from_yaml(cls, filepath):
        import yaml

        with open(filepath) as f:
            return cls.from_dict(yaml.safe_load(f))

    def to_json(self, filepath=None):
        """Serialize the record. Returns the JSON text, and writes it atomically if filepath is given."""
        data = self.to_dict()
        if self._SCHEMA is not None:
            util.validate_json(data, self._SCHEMA)
        text = util.dumps(data)
        if filepath is not None:
            util.write_atomic(filepath, text)
        return text
