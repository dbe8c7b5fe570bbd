# app_representaciones/apps.py

from django.apps import AppConfig


class AppRepresentacionesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'app_representaciones'
    verbose_name = "Representaciones modulares"
