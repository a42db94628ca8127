# -*- coding: utf-8 -*-
import os
import dj_database_url
# for relative paths
here = lambda x: os.path.join(os.path.abspath(os.path.dirname(__file__)), x)

DEBUG = os.environ.get('DEBUG', '') == '1'

# Parse database configuration from $DATABASE_URL
DATABASES = {
    'default': dj_database_url.config(default='sqlite:///%s' % here('resistance.db'))
}

DEFAULT_AUTO_FIELD = 'django.db.models.AutoField'

TIME_ZONE = 'UTC'

USE_TZ = True

SECRET_KEY = os.environ.get('SECRET_KEY', 'resistance-local-only-key')

INSTALLED_APPS = (
    'django.contrib.contenttypes',
    'resistance',
)

# Engine defaults, each overridden by the matching command-line flag.
RESISTANCE = {
    'PRECISION': int(os.environ.get('RESISTANCE_PRECISION', 50)),
    'FAMILY_CAP': int(os.environ.get('RESISTANCE_FAMILY_CAP', 2048)),
    'MAX_SUPPORT': int(os.environ.get('RESISTANCE_MAX_SUPPORT', 32)),
    'DEDUP_POLICY': os.environ.get('RESISTANCE_DEDUP_POLICY', 'published'),
    'OUTPUT_DIR': os.environ.get('RESISTANCE_OUTPUT_DIR', here('../runs')),
    'SCHEMA_VERSION': 1,
}

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s'
        },
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'verbose'
        }
    },
    'loggers': {
        'resistance': {
            'handlers': ['console'],
            'level': os.environ.get('RESISTANCE_LOG_LEVEL', 'INFO'),
            'propagate': False,
        },
    }
}
