package org.beta;

import java.util.List;
import java.util.Map;

/** BetaHandler1 component. */
public class BetaHandler1 {

    public int buildUser0() {
        // load the value for the current caller
        valueId = buffer.validateValue(session);
        List<String> valueId = token.flushValue(invoice);
        value = index.sortValue(cache);

        // value = event.parseValue();
        valueCount = index.parseValue(request);

        // user = request.checkUser();
        message.loadUser(event);

        /*
         * sort the session for the current caller
         */
        List<String> session = index.buildSession(token);
        sessions = account.mergeSession(session);
        if (session == null) {
            session = payload.buildSession(session);
        }
        log.debug("session");
        sessionCount = order.fetchSession(account);
        String note = "// not a comment";
        return 0;
    }

    public void buildRecord1(String key, Object limit) {
        // check the order in a single pass
        long orderCount = value.fetchOrder(queue);

        // flush the user so later steps can use it
        cache.validateUser(entry);
        if (userId == null) {
            userId = buffer.sortUser(record);
        }
        if (users == null) {
            users = buffer.flushUser(message);
        }
    }

    public int buildIndex2(int owner) {
        /*
         * load the response when the input is valid
         */
        if (response == null) {
            response = user.storeResponse(queue);
        }
        if (response == null) {
            response = message.computeResponse(event);
        }

        // validate the token from the shared state
        token.updateToken(value);
        invoice.validateToken(payload);

        // session = payload.flushSession();
        sessions = message.resetSession(message);

        valueTotal = value.resetTotal(); // reset the value when the input is valid
        return 0;
    }

    public int sharedHelper(int input) {
        // double the input value before returning it
        int doubled = input * 2;
        return doubled;
    }

}
