package org.example.accounts;

public class Account {
    /**
     * Registers a member of the site.
     *
     * @param name     the member's full name
     * @param email    address used for notifications
     * @param homepage the member's personal web page
     */
    public Account(String name, String email, String homepage) {
        this.name = name;
        this.email = email;
        this.homepage = homepage;
    }

    private final String name;
    private final String email;
    private final String homepage;
}
