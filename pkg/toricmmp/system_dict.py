import logging
import warnings

logger = logging.getLogger(__name__)


def _bang_path(key):
    """Returns the dotted path of a ``!ALIAS.a.b`` key, or None"""
    if isinstance(key, str) and key.startswith("!"):
        return key[1:].split(".")
    return None


class SystemDict(object):
    """
    Nested run configuration with bang-string access

    Keys starting with ``!`` are dotted paths below an alias, e.g.
    ``config["!MMP.iteration_cap_factor"]``. Yaml documents of the form
    ``{"alias": ..., "properties": {...}}`` are merged under their alias, so a
    user rc file only needs to name the values it changes.
    """
    def __init__(self, new_dict=None):
        self.dic = {}
        entries = new_dict if isinstance(new_dict, list) else [new_dict]
        for entry in entries:
            if isinstance(entry, dict):
                self.update(entry)

    def update(self, new_dict):
        if "alias" in new_dict and "properties" in new_dict:
            alias = new_dict["alias"]
            logger.debug("merging config block %s", alias)
            section = self.dic.setdefault(alias, {})
            recursive_update(section, new_dict["properties"])
            return

        plain = {}
        for key, value in new_dict.items():
            if _bang_path(key):
                self[key] = value
            else:
                plain[key] = value
        recursive_update(self.dic, plain)

    def _parent(self, path, create=False):
        entry = self.dic
        for chunk in path[:-1]:
            if create:
                entry = entry.setdefault(chunk, {})
            elif isinstance(entry, dict) and chunk in entry:
                entry = entry[chunk]
            else:
                return None
        return entry if isinstance(entry, dict) else None

    def __getitem__(self, item):
        path = _bang_path(item)
        if path is None:
            return self.dic[item]
        parent = self._parent(path)
        if parent is None or path[-1] not in parent:
            raise KeyError(item)
        return parent[path[-1]]

    def __setitem__(self, key, value):
        path = _bang_path(key)
        if path is None:
            self.dic[key] = value
        else:
            self._parent(path, create=True)[path[-1]] = value

    def __contains__(self, item):
        path = _bang_path(item)
        if path is None:
            return item in self.dic
        parent = self._parent(path)
        return parent is not None and path[-1] in parent

    def __repr__(self):
        lines = ["<SystemDict> aliases: {}".format(", ".join(self.dic))]
        for alias, section in self.dic.items():
            lines += ["{}:".format(alias)]
            if isinstance(section, dict):
                lines += ["  {}: {}".format(k, v) for k, v in section.items()]
            else:
                lines += ["  {}".format(section)]
        return "\n".join(lines)


def recursive_update(old_dict, new_dict):
    """Merges ``new_dict`` into ``old_dict`` in place and returns it"""
    for key, new in new_dict.items():
        old = old_dict.get(key)
        if isinstance(old, dict) and isinstance(new, dict):
            recursive_update(old, new)
            continue
        if key in old_dict and isinstance(old, dict) != isinstance(new, dict):
            warnings.warn("Overwriting config entry {}: {} with {}"
                          "".format(key, old, new))
        old_dict[key] = new

    return old_dict
