"""Flat key=value configuration files mirroring the command line flags."""
import logging


_LOGGER = logging.getLogger(__name__)


# spellings of true and false accepted for switches
_TRUE = ('1', 'true', 'yes', 'on')
_FALSE = ('0', 'false', 'no', 'off')


def load_config(path):
    """
    Read a configuration file.

    Args:
        path (str): the path to a file of key=value lines; blank lines and
            lines starting with '#' are ignored

    Returns:
        dict: values keyed by the flag destination ('grid-v' -> 'grid_v')

    """
    config = {}
    with open(path) as stream:
        for number, line in enumerate(stream, start=1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            if '=' not in line:
                msg = '{}:{}: expected key=value, got {!r}'.format(path, number, line)
                raise ValueError(msg)
            key, value = line.split('=', 1)
            key = key.strip().lstrip('-').replace('-', '_')
            config[key] = value.strip()
    return config


def apply_config(parser, config):
    """
    Install configuration values as parser defaults.

    Values of switches are converted to booleans; all other values stay
    strings so the parser converts them with the flag's own type.

    Args:
        parser (argparse.ArgumentParser): the parser of one subcommand
        config (dict): values keyed by flag destination

    Returns:
        None

    """
    actions = {action.dest: action for action in parser._actions}
    defaults = {}
    for key, value in config.items():
        action = actions.get(key)
        if action is None or key == 'config':
            _LOGGER.warning('ignoring unknown configuration key %r', key)
            continue
        if action.nargs == 0:
            if value.lower() not in _TRUE + _FALSE:
                raise ValueError('switch {} expects true or false: {!r}'.format(key, value))
            value = value.lower() in _TRUE
        defaults[key] = value
    parser.set_defaults(**defaults)


# explicitly define the outward facing API of this module
__all__ = [load_config.__name__, apply_config.__name__]
